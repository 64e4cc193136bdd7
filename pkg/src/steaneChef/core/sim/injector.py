"""
Exhaustive fault injection.

Without sampled noise the protocol is linear in its faults, so the effect of every
single fault is computed once, in one batched frame run with a shot per fault. A
combination is accepted iff its acceptance signatures XOR to zero, which turns the
search for accepted pairs into bucketing by signature.
"""

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from steaneChef.config.config import Config
from steaneChef.core.codes.css_code import X, Z
from steaneChef.core.faults.fault_set import FaultSet, coset_table, fault_set
from steaneChef.core.ftcheck.distinctness import DistinctnessWitness
from steaneChef.core.ftcheck.strict_ft import CONDITIONS
from steaneChef.core.protocol.schedule import CX, IDLE, MEAS, TICK_PREP, Location, ProtocolSchedule
from steaneChef.core.sim.frame_simulator import (
    Fault,
    FrameSimulator,
    _Injection,
    _injection_from_rows,
    pauli_bits,
)
from steaneChef.utils.errors import BudgetExceededError, ContractViolation

logger = logging.getLogger(__name__)


def _pack(column: np.ndarray) -> int:
    return int.from_bytes(np.packbits(column, bitorder="little").tobytes(), "little")


class FaultEffectTable:
    """
    Linear effect of every admissible single fault of a schedule.

    Attributes:
        options: ``(location, pauli)`` pairs in location order.
        signatures: Packed acceptance parities per option; zero means accepted.
        residual_x: Canonical form of block 1's X residual per option.
        residual_z: Canonical form of block 1's Z residual per option.
    """

    def __init__(self, schedule: ProtocolSchedule, prep_only: bool = False):
        self.schedule = schedule
        self.code = schedule.code
        self.prep_only = prep_only
        self.locations: List[Location] = schedule.locations(prep_only=prep_only)
        self.options: List[Fault] = [(loc, p) for loc in self.locations for p in loc.paulis()]
        self.location_index: List[int] = [
            i for i, loc in enumerate(self.locations) for _ in loc.paulis()
        ]
        self.x_table = coset_table(self.code, X)
        self.z_table = coset_table(self.code, Z)
        self.logger = logging.getLogger(__name__)

        sim = FrameSimulator(schedule)
        batch = sim.run(len(self.options), injections=self._single_fault_injections())
        signature = sim.checks.signature(batch)
        rx, rz = batch.residual_x, batch.residual_z
        self.signatures: List[int] = []
        self.residual_x: List[int] = []
        self.residual_z: List[int] = []
        for shot in range(len(self.options)):
            self.signatures.append(_pack(signature[:, shot]))
            self.residual_x.append(self.x_table.canonical(_pack(rx[:, shot])))
            self.residual_z.append(self.z_table.canonical(_pack(rz[:, shot])))
        self.logger.debug(
            "fault effects for %s: %d locations, %d options", self.code.name, len(self.locations), len(self.options)
        )

    def _single_fault_injections(self) -> Dict[int, List[_Injection]]:
        rows: Dict[int, list] = defaultdict(list)
        for shot, (loc, pauli) in enumerate(self.options):
            if loc.kind == MEAS:
                rows[loc.tick].append((shot, loc.qubits[0], False, False, True))
            elif loc.kind == CX:
                for q, p in zip(loc.qubits, pauli):
                    xb, zb = pauli_bits(p)
                    rows[loc.tick].append((shot, q, xb, zb, False))
            else:
                xb, zb = pauli_bits(pauli)
                rows[loc.tick].append((shot, loc.qubits[0], xb, zb, False))
        out = {}
        for tick, entries in rows.items():
            inj = _injection_from_rows([e[1:] for e in entries], 0)
            inj.shots = np.array([e[0] for e in entries], dtype=np.int64)
            out[tick] = [inj]
        return out

    def __len__(self) -> int:
        return len(self.options)

    def combine(self, indices: Sequence[int]) -> Tuple[int, int, int]:
        """Signature and residuals of a combination of options."""
        sig = rx = rz = 0
        for i in indices:
            sig ^= self.signatures[i]
            rx ^= self.residual_x[i]
            rz ^= self.residual_z[i]
        return sig, rx, rz

    def pauli_counts(self) -> List[int]:
        return [len(loc.paulis()) for loc in self.locations]


def combination_count(counts: Sequence[int], k: int) -> int:
    """Number of ways to fault ``k`` distinct locations with the given Pauli counts."""
    poly = [1] + [0] * k
    for c in counts:
        for j in range(k, 0, -1):
            poly[j] += poly[j - 1] * c
    return poly[k]


@dataclass
class Counterexample:
    """An accepted fault combination whose block 1 residual outweighs the number of faults."""

    faults: List[Fault]
    weight_x: Optional[int]
    weight_z: Optional[int]

    def to_dict(self) -> Dict[str, object]:
        return {
            "faults": [
                {"location": loc.to_dict(), "pauli": pauli} for loc, pauli in self.faults
            ],
            "weight_x": self.weight_x,
            "weight_z": self.weight_z,
        }


@dataclass
class InjectionReport:
    code: str
    max_faults: int
    prep_only: bool
    locations: int
    combinations: Dict[int, int] = field(default_factory=dict)
    accepted: Dict[int, int] = field(default_factory=dict)
    counterexamples: List[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> Dict[str, object]:
        return {
            "code": self.code,
            "max_faults": self.max_faults,
            "prep_only": self.prep_only,
            "locations": self.locations,
            "combinations": {str(k): v for k, v in self.combinations.items()},
            "accepted": {str(k): v for k, v in self.accepted.items()},
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "ok": self.ok,
        }


class FaultInjector:
    """Enumerates fault combinations by size and collects counterexamples."""

    def __init__(self, table: FaultEffectTable, progress: bool = False):
        self.table = table
        self.progress = progress
        self.logger = logging.getLogger(__name__)
        self._buckets: Dict[int, List[int]] = defaultdict(list)
        for i, sig in enumerate(table.signatures):
            self._buckets[sig].append(i)

    def _distinct_locations(self, indices: Sequence[int]) -> bool:
        locs = [self.table.location_index[i] for i in indices]
        return len(set(locs)) == len(locs)

    def accepted_combinations(self, k: int) -> Iterator[Tuple[int, ...]]:
        """Index tuples ``i1 < ... < ik`` at distinct locations whose signatures cancel."""
        table = self.table
        if k == 0:
            yield ()
            return
        if k == 1:
            yield from ((i,) for i in self._buckets.get(0, ()))
            return
        if k == 2:
            for members in self._buckets.values():
                for i, j in itertools.combinations(members, 2):
                    if table.location_index[i] != table.location_index[j]:
                        yield i, j
            return
        for head in itertools.combinations(range(len(table)), k - 1):
            if not self._distinct_locations(head):
                continue
            sig = table.combine(head)[0]
            for last in self._buckets.get(sig, ()):
                if last > head[-1] and self._distinct_locations(head + (last,)):
                    yield head + (last,)

    def _weight(self, coset, key: int, k: int) -> Tuple[bool, Optional[int]]:
        if coset.leq_canonical(key, k):
            return True, coset.min_weight_canonical(key)
        return False, coset.min_weight_canonical(key)

    def run(self, max_faults: int, budget: Optional[int] = None) -> InjectionReport:
        """
        Check every combination of up to ``max_faults`` faults.

        Raises:
            BudgetExceededError: If the number of combinations exceeds ``budget``
                (default: the configured injection budget).
        """
        if max_faults < 0:
            raise ContractViolation("max_faults must be non-negative")
        table = self.table
        budget = Config().inject_budget if budget is None else budget
        counts = table.pauli_counts()
        totals = {k: combination_count(counts, k) for k in range(1, max_faults + 1)}
        needed = sum(totals.values())
        if needed > budget:
            raise BudgetExceededError(needed, budget)
        report = InjectionReport(
            table.code.name, max_faults, table.prep_only, len(table.locations), combinations=totals
        )
        for k in range(1, max_faults + 1):
            accepted = 0
            combos = self.accepted_combinations(k)
            for combo in tqdm(combos, desc=f"{k}-fault combinations", disable=not self.progress, leave=False):
                accepted += 1
                _, rx, rz = table.combine(combo)
                ok_x, wx = self._weight(table.x_table, rx, k)
                ok_z, wz = self._weight(table.z_table, rz, k)
                if not (ok_x and ok_z):
                    report.counterexamples.append(
                        Counterexample([table.options[i] for i in combo], wx, wz)
                    )
            report.accepted[k] = accepted
            self.logger.info(
                "%s: %d of %d %d-fault combinations accepted, %d counterexample(s) so far",
                table.code.name, accepted, totals[k], k, len(report.counterexamples),
            )
        return report


def exhaustive_inject(
    schedule: ProtocolSchedule,
    max_faults: int,
    budget: Optional[int] = None,
    prep_only: bool = False,
    progress: bool = False,
) -> InjectionReport:
    """
    Enumerate all combinations of at most ``max_faults`` faults and report every
    accepted one that leaves block 1 with an X or Z residual heavier than the number
    of faults, modulo stabilizers.

    Args:
        prep_only: Restrict to resets and the preparation layers.
    """
    table = FaultEffectTable(schedule, prep_only=prep_only)
    return FaultInjector(table, progress=progress).run(max_faults, budget)


def _source_fault(schedule: ProtocolSchedule, block: int, fs: FaultSet, bits: int) -> Fault:
    """A fault of ``block``'s preparation circuit whose propagated error is ``bits``."""
    circuit = schedule.circuits[block - 1]
    provenance = fs.provenance.get(bits)
    depth = schedule.prep_depth
    if provenance is not None:
        position, _ = provenance
        gate = circuit.gates[position]
        tick = 1 + circuit.layer_indices()[position]
        pauli = "XX" if fs.basis == X else "ZZ"
        qubits = (schedule.qubit(block, gate[0]), schedule.qubit(block, gate[1]))
        return Location(CX, tick, qubits), pauli
    # a bare single-qubit error, placed at the end of the preparation layers
    q = schedule.qubit(block, bits.bit_length() - 1)
    tick = schedule.ticks()[depth] if depth else None
    if tick is None or tick.kind != TICK_PREP:
        raise ContractViolation("no preparation layer to place a single-qubit fault in")
    if q in tick.idle:
        return Location(IDLE, depth, (q,)), fs.basis
    for gate in tick.gates:
        if q in gate:
            pauli = fs.basis + "I" if gate[0] == q else "I" + fs.basis
            return Location(CX, depth, gate), pauli
    raise ContractViolation(f"qubit {q} is not in the last preparation layer")


def witness_faults(schedule: ProtocolSchedule, witness: DistinctnessWitness) -> List[Fault]:
    """
    Protocol faults reproducing the two subsets of a distinctness witness.

    Each error is traced back to a fault in one of the blocks on its side of the
    violated condition.
    """
    if witness.condition is None:
        raise ContractViolation("witness carries no condition number")
    _, basis, left, right = next(c for c in CONDITIONS if c[0] == witness.condition)
    faults: List[Fault] = []
    for subset, blocks in ((witness.subset_1, left), (witness.subset_2, right)):
        for error in subset:
            for index in blocks:
                fs = fault_set(schedule.circuits[index], basis)
                if error.bits in fs:
                    faults.append(_source_fault(schedule, index + 1, fs, error.bits))
                    break
            else:
                raise ContractViolation(f"error {error} does not come from blocks {[b + 1 for b in blocks]}")
    return faults
