"""
Fault-set guided synthesis.

The elimination of :mod:`steaneChef.core.synth.greedy` builds the circuit back to
front, so each placed gate is prepended to a suffix whose fault sets are already known.
Prepending CX(i, j) adds one new error per basis. A gate is accepted only if the grown
fault sets stay t-distinct to the reference sets; otherwise the next candidate is tried,
and when none is left the last gate is removed and blocked at its depth.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Set, Tuple

from steaneChef.core.circuit.prep_circuit import PrepCircuit
from steaneChef.core.codes.css_code import BASES, X, Z, CssCode
from steaneChef.core.faults.fault_set import FaultSet, coset_table, prepend_gate, suffix_propagators
from steaneChef.core.ftcheck.distinctness import ReferenceIndex, check_distinct_cap
from steaneChef.core.synth.greedy import EliminationState, Gate, ordered_tiers
from steaneChef.core.synth.synth_config import SynthConfig
from steaneChef.utils.errors import ContractViolation, SynthesisExhaustedError

logger = logging.getLogger(__name__)


@dataclass
class SynthStats:
    """Bookkeeping of one synthesis stage."""

    stage: str
    gates: int = 0
    depth: int = 0
    backtracks: int = 0
    restarts: int = 0
    seed: Optional[int] = None
    max_depth_reached: int = 0
    row_reductions: int = 0

    def to_dict(self) -> Dict[str, object]:
        return {
            "stage": self.stage,
            "gates": self.gates,
            "depth": self.depth,
            "backtracks": self.backtracks,
            "restarts": self.restarts,
            "seed": self.seed,
            "max_depth_reached": self.max_depth_reached,
            "row_reductions": self.row_reductions,
        }


@dataclass
class SynthResult:
    circuit: PrepCircuit
    stats: SynthStats
    fault_sets: Dict[str, FaultSet] = field(default_factory=dict)


class FaultTracker:
    """
    Fault set of one basis for the suffix built so far.

    ``companion`` holds errors that sit on the same side of the distinctness condition
    but come from another, already finished circuit.
    """

    def __init__(
        self,
        basis: str,
        code: CssCode,
        index: Optional[ReferenceIndex] = None,
        companion: Optional[FaultSet] = None,
    ):
        self.basis = basis
        self.index = index
        self.table = coset_table(code, basis)
        self.props = suffix_propagators(code.n)
        self.own: List[int] = [1 << q for q in range(code.n)]
        self.members: Set[int] = set(self.own)
        self.companion: FrozenSet[int] = frozenset(companion or ())
        self.keys: List[int] = [self.table.canonical(b) for b in self.members | self.companion]
        self._appended: List[Tuple[bool, bool]] = []

    def new_error(self, gate: Gate) -> int:
        i, j = gate
        return self.props[i] ^ self.props[j]

    def _known(self, bits: int) -> bool:
        return bits in self.members or bits in self.companion

    def accepts(self, gate: Gate) -> bool:
        if self.index is None:
            return True
        bits = self.new_error(gate)
        if self._known(bits):
            return True
        return self.index.accepts(self.keys, self.table.canonical(bits))

    def push(self, gate: Gate) -> None:
        bits = prepend_gate(self.props, self.basis, *gate)
        is_new = bits not in self.members
        keyed = is_new and bits not in self.companion
        if is_new:
            self.members.add(bits)
            self.own.append(bits)
        if keyed:
            self.keys.append(self.table.canonical(bits))
        self._appended.append((is_new, keyed))

    def pop(self, gate: Gate) -> None:
        i, j = gate
        if self.basis == X:
            self.props[i] ^= self.props[j]
        else:
            self.props[j] ^= self.props[i]
        is_new, keyed = self._appended.pop()
        if is_new:
            self.members.discard(self.own.pop())
        if keyed:
            self.keys.pop()

    def fault_set(self, n: int) -> FaultSet:
        return FaultSet(self.basis, n, self.own)


def _heavy(code: CssCode, basis: str, bits: int) -> bool:
    return not coset_table(code, basis).leq(bits, 2)


def substructure_table(code: CssCode, circuit: PrepCircuit, basis: str) -> Dict[Gate, Set[Tuple[Gate, int]]]:
    """
    Gate pairs in the last two layers of ``circuit`` that spread one fault to a
    weight-3 error which stays heavier than 2 modulo stabilizers.

    Maps the earlier gate to ``(later gate, shared qubit)``.
    """
    layers = circuit.layers()
    if len(layers) < 2:
        return {}
    out: Dict[Gate, Set[Tuple[Gate, int]]] = {}
    for first in layers[-2]:
        i, j = first
        for second in layers[-1]:
            a, b = second
            if basis == X and a == j and b != i:
                shared, bits = j, (1 << i) | (1 << j) | (1 << b)
            elif basis == Z and b == i and a != j:
                shared, bits = i, (1 << i) | (1 << j) | (1 << a)
            else:
                continue
            if _heavy(code, basis, bits):
                out.setdefault(first, set()).add((second, shared))
    return out


@dataclass
class _Step:
    gate: Gate
    used_before: Set[int]
    front_before: Tuple[Optional[Gate], Optional[Gate]]


class GuidedSynthesizer:
    """
    Backtracking elimination constrained by reference fault sets.

    Args:
        code: Code whose |0>_L is prepared.
        t: Distinctness order.
        cfg: Search parameters.
        refs: Reference fault set per basis.
        companions: Finished errors on the same side as the new circuit, per basis.
        ref_circuits: Circuits the references came from, per basis; they feed the
            last-layer and substructure heuristics.
        start_from_rref: Start from the reduced row-echelon form of H_X.
        stage: Name used in logs and failure reports.
    """

    def __init__(
        self,
        code: CssCode,
        t: int,
        cfg: Optional[SynthConfig] = None,
        refs: Optional[Mapping[str, Optional[FaultSet]]] = None,
        companions: Optional[Mapping[str, Optional[FaultSet]]] = None,
        ref_circuits: Optional[Mapping[str, Sequence[PrepCircuit]]] = None,
        start_from_rref: bool = False,
        stage: str = "guided",
    ):
        self.code = code
        self.t = t
        self.cfg = cfg or SynthConfig()
        self.refs = {b: f for b, f in (refs or {}).items() if f is not None}
        self.companions = {b: f for b, f in (companions or {}).items() if f is not None}
        self.ref_circuits = {b: list(cs) for b, cs in (ref_circuits or {}).items()}
        self.start_from_rref = start_from_rref
        self.stage = stage
        self.logger = logging.getLogger(__name__)

        for basis, ref in self.refs.items():
            if ref.n != code.n:
                raise ContractViolation(f"{basis} reference on {ref.n} qubits for a code on {code.n}")
        self.indexes: Dict[str, ReferenceIndex] = {}
        if self.refs:
            check_distinct_cap(t)
            self.indexes = {b: ReferenceIndex(ref, t, code) for b, ref in self.refs.items()}

        self.last_layer: Set[Gate] = set()
        if self.cfg.forbid_ref_last_layer and self.refs and t >= 2:
            for circuits in self.ref_circuits.values():
                for c in circuits:
                    layers = c.layers()
                    if layers:
                        self.last_layer.update(layers[-1])
        self.substructures: Dict[Gate, Set[Tuple[Gate, int]]] = {}
        if self.cfg.forbid_ref_substructures and self.refs and t >= 2:
            for basis, circuits in self.ref_circuits.items():
                for c in circuits:
                    for gate, follow in substructure_table(code, c, basis).items():
                        self.substructures.setdefault(gate, set()).update(follow)
        self.stats = SynthStats(stage)

    def _forbidden(self, gate: Gate, front: Dict[int, Gate]) -> bool:
        i, j = gate
        if gate in self.last_layer and i not in front and j not in front:
            return True
        for later, shared in self.substructures.get(gate, ()):
            if front.get(shared) == later:
                return True
        return False

    def _choose(self, state, tiers, blocked, rng, trackers, front) -> Optional[Gate]:
        order = sorted(tiers)
        if self.cfg.perturbation_prob > 0 and rng.random() < self.cfg.perturbation_prob and len(order) > 1:
            order[0], order[1] = order[1], order[0]
        for tier in ordered_tiers({d: tiers[d] for d in order}, rng, keep_order=True):
            for gate in tier:
                if gate in blocked:
                    continue
                if self._forbidden(gate, front):
                    continue
                if all(tr.accepts(gate) for tr in trackers.values()):
                    return gate
                blocked.add(gate)
        return None

    def _attempt(self, seed: int) -> Optional[SynthResult]:
        rng = random.Random(seed)
        state = EliminationState(self.code.h_x, self.cfg.optimize_depth, self.start_from_rref)
        trackers = {
            b: FaultTracker(b, self.code, self.indexes.get(b), self.companions.get(b)) for b in BASES
        }
        front: Dict[int, Gate] = {}
        blocked: List[Set[Gate]] = [set()]
        stack: List[_Step] = []
        backtracks = 0
        while not state.is_reduced():
            tiers = state.reducing_tiers()
            gate = self._choose(state, tiers, blocked[-1], rng, trackers, front) if tiers else None
            if gate is not None:
                i, j = gate
                stack.append(_Step(gate, set(state.used), (front.get(i), front.get(j))))
                state.apply(gate)
                for tr in trackers.values():
                    tr.push(gate)
                front[i] = front[j] = gate
                blocked.append(set())
                self.stats.max_depth_reached = max(self.stats.max_depth_reached, len(stack))
                continue
            if state.used:
                state.new_layer()
                continue
            if not tiers:
                self.logger.warning("%s: local minimum at %d nonzero entries, row-reducing", self.stage, state.nnz)
                state.row_reduce()
                self.stats.row_reductions += 1
                continue
            # every reducing gate at this depth failed
            if not stack:
                self.logger.debug("%s: seed %d exhausted at depth 0", self.stage, seed)
                return None
            backtracks += 1
            self.stats.backtracks += 1
            if backtracks > self.cfg.max_backtracks:
                self.logger.debug("%s: seed %d hit %d backtracks", self.stage, seed, backtracks)
                return None
            step = stack.pop()
            state.undo()
            for tr in trackers.values():
                tr.pop(step.gate)
            i, j = step.gate
            for q, prev in zip((i, j), step.front_before):
                if prev is None:
                    front.pop(q, None)
                else:
                    front[q] = prev
            state.used = step.used_before
            blocked.pop()
            blocked[-1].add(step.gate)
            self.logger.debug("%s: backtrack from depth %d, blocking CX %d %d", self.stage, len(stack) + 1, i, j)
        circuit = state.circuit()
        return SynthResult(circuit, self.stats, {b: tr.fault_set(self.code.n) for b, tr in trackers.items()})

    def run(self) -> SynthResult:
        """
        Run attempts with seeds ``seed ^ r`` for ``r = 0..max_restarts``.

        Raises:
            SynthesisExhaustedError: If no attempt finishes.
        """
        self.logger.info(
            "%s: guided synthesis for %s (t=%d, references %s)",
            self.stage, self.code.name, self.t, sorted(self.refs) or "none",
        )
        for r in range(self.cfg.max_restarts + 1):
            seed = self.cfg.seed ^ r
            result = self._attempt(seed)
            if result is not None:
                self.stats.restarts = r
                self.stats.seed = seed
                self.stats.gates = result.circuit.cnot_count
                self.stats.depth = result.circuit.depth()
                self.logger.info(
                    "%s: %d CNOTs, depth %d after %d restart(s), %d backtrack(s)",
                    self.stage, self.stats.gates, self.stats.depth, r, self.stats.backtracks,
                )
                return result
            self.stats.restarts = r + 1
        self.stats.restarts = self.cfg.max_restarts
        raise SynthesisExhaustedError(self.stage, self.stats.to_dict())


def guided_synth(
    code: CssCode,
    ref_x: Optional[FaultSet],
    ref_z: Optional[FaultSet],
    t: int,
    cfg: Optional[SynthConfig] = None,
    **kwargs,
) -> PrepCircuit:
    """
    Synthesize a circuit whose X (Z) fault set is t-distinct to ``ref_x`` (``ref_z``).

    Extra keyword arguments are passed to :class:`GuidedSynthesizer`.
    """
    return GuidedSynthesizer(code, t, cfg, refs={X: ref_x, Z: ref_z}, **kwargs).run().circuit
