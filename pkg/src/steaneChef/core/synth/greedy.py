"""
Greedy Gaussian elimination on the column space of H_X.

Each elimination step adds column ``i`` to column ``j``, i.e. a CNOT with control
``i`` and target ``j``. Once only ``rank`` columns are nonzero the matrix describes a
product state; the preparation circuit initializes those columns in |+>, the rest in
|0>, and applies the elimination gates in reverse.
"""

import logging
import random
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from steaneChef.core.circuit.prep_circuit import PrepCircuit
from steaneChef.core.codes.css_code import CssCode
from steaneChef.core.gf2 import BitMatrix
from steaneChef.core.synth.synth_config import SynthConfig
from steaneChef.utils.errors import ContractViolation

logger = logging.getLogger(__name__)

Gate = Tuple[int, int]


def cost(h: BitMatrix, gate: Gate) -> int:
    """Number of nonzero entries of ``h`` after adding column ``gate[0]`` to ``gate[1]``."""
    i, j = gate
    if i == j:
        raise ContractViolation("control equals target")
    masks = h.column_masks()
    if not (0 <= i < h.cols and 0 <= j < h.cols):
        raise ContractViolation(f"gate {gate} out of range for {h.cols} columns")
    return h.nnz - masks[j].bit_count() + (masks[i] ^ masks[j]).bit_count()


def _rows_from_columns(cols: Sequence[int], rows: int) -> List[int]:
    out = [0] * rows
    for j, mask in enumerate(cols):
        while mask:
            low = mask & -mask
            out[low.bit_length() - 1] |= 1 << j
            mask ^= low
    return out


class EliminationState:
    """
    Column-major working copy of H_X under elimination.

    ``used`` holds the qubits touched in the current elimination layer when depth is
    being optimized; it is reset when no reducing gate remains among the other qubits.
    """

    def __init__(self, h: BitMatrix, optimize_depth: bool = True, start_from_rref: bool = False):
        if start_from_rref:
            h = h.rref()[0]
        self.n = h.cols
        self.m = h.rows
        self.rank = h.rank()
        self.cols: List[int] = list(h.column_masks())
        self.optimize_depth = optimize_depth
        self.used: Set[int] = set()
        self.gates: List[Gate] = []
        self.row_reductions = 0

    @property
    def matrix(self) -> BitMatrix:
        return BitMatrix.from_ints(self.n, _rows_from_columns(self.cols, self.m))

    @property
    def nnz(self) -> int:
        return sum(c.bit_count() for c in self.cols)

    def delta(self, i: int, j: int) -> int:
        return (self.cols[i] ^ self.cols[j]).bit_count() - self.cols[j].bit_count()

    def is_reduced(self) -> bool:
        return sum(1 for c in self.cols if c) == self.rank

    def reducing_tiers(self, exclude_used: bool = True) -> Dict[int, List[Gate]]:
        """Gates that lower the number of nonzero entries, grouped by how much."""
        tiers: Dict[int, List[Gate]] = {}
        skip = self.used if exclude_used else ()
        for i in range(self.n):
            if i in skip or not self.cols[i]:
                continue
            for j in range(self.n):
                if j == i or j in skip:
                    continue
                d = self.delta(i, j)
                if d < 0:
                    tiers.setdefault(d, []).append((i, j))
        return tiers

    def apply(self, gate: Gate) -> None:
        i, j = gate
        self.cols[j] ^= self.cols[i]
        self.gates.append(gate)
        if self.optimize_depth:
            self.used.update(gate)

    def undo(self) -> Gate:
        i, j = self.gates.pop()
        self.cols[j] ^= self.cols[i]
        return i, j

    def new_layer(self) -> None:
        self.used = set()

    def row_reduce(self) -> None:
        """Escape a local minimum by bringing the working matrix to row-echelon form."""
        reduced = self.matrix.rref()[0]
        self.cols = list(reduced.column_masks())
        self.row_reductions += 1

    def circuit(self) -> PrepCircuit:
        if not self.is_reduced():
            raise ContractViolation("elimination has not finished")
        plus = [j for j, c in enumerate(self.cols) if c]
        return PrepCircuit.from_plus_qubits(self.n, plus, reversed(self.gates))


def ordered_tiers(
    tiers: Dict[int, List[Gate]], rng: random.Random, keep_order: bool = False
) -> Iterator[List[Gate]]:
    """Tiers from best to worst (or in dict order), each sorted and then shuffled when first reached."""
    for d in (tiers if keep_order else sorted(tiers)):
        tier = sorted(tiers[d])
        rng.shuffle(tier)
        yield tier


def greedy_synth(code: CssCode, cfg: Optional[SynthConfig] = None, start_from_rref: bool = False) -> PrepCircuit:
    """
    Synthesize a |0>_L preparation circuit by greedy elimination.

    The cheapest reducing CNOT is taken at each step; ties are broken by a seeded RNG.
    When no gate reduces the matrix, a new elimination layer is started, and if the
    layer was already empty the matrix is brought to row-echelon form.
    """
    cfg = cfg or SynthConfig()
    rng = random.Random(cfg.seed)
    state = EliminationState(code.h_x, cfg.optimize_depth, start_from_rref)
    while not state.is_reduced():
        tiers = state.reducing_tiers()
        if not tiers:
            if state.used:
                state.new_layer()
            else:
                logger.warning("local minimum at %d nonzero entries, row-reducing", state.nnz)
                state.row_reduce()
            continue
        gate = next(ordered_tiers(tiers, rng))[0]
        state.apply(gate)
        logger.debug("greedy step %d: CX %d %d (nnz %d)", len(state.gates), gate[0], gate[1], state.nnz)
    circuit = state.circuit()
    logger.info(
        "greedy circuit for %s: %d CNOTs, depth %d", code.name, circuit.cnot_count, circuit.depth()
    )
    return circuit
