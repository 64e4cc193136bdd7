"""
Four-block verified preparation of |0>_L.

Blocks 1..4 are prepared in parallel by their own circuits. Transversal CNOTs then run
1 -> 2 together with 3 -> 4, followed by 3 -> 1. Block 2 and block 4 are measured in
the Z basis, block 3 in the X basis, and block 1 is the output. Qubit ``q`` of block
``b`` has global index ``(b - 1) * n + q``.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from steaneChef.core.circuit.circuit_io import _int, circuit_lines, numbered_lines, parse_circuit_lines
from steaneChef.core.circuit.prep_circuit import ZERO, PrepCircuit, verify_prepares
from steaneChef.core.codes.css_code import X, Z, CssCode
from steaneChef.core.gf2 import BitVector
from steaneChef.utils.errors import ContractViolation, ProtocolParseError

logger = logging.getLogger(__name__)

Gate = Tuple[int, int]

BLOCKS = (1, 2, 3, 4)
OUTPUT_BLOCK = 1
# transversal rounds as (control block, target block)
TRANSVERSAL_ROUNDS: Tuple[Tuple[Tuple[int, int], ...], ...] = (((1, 2), (3, 4)), ((3, 1),))
MEASUREMENTS: Dict[int, str] = {2: Z, 3: X, 4: Z}

INIT = "init"
CX = "cx"
IDLE = "idle"
MEAS = "meas"

TWO_QUBIT_PAULIS = tuple(a + b for a, b in itertools.product("IXYZ", repeat=2) if a + b != "II")
ONE_QUBIT_PAULIS = ("X", "Y", "Z")

# tick kinds
TICK_INIT = "init"
TICK_PREP = "prep"
TICK_TRANSVERSAL = "transversal"
TICK_MEASURE = "measure"


@dataclass(frozen=True)
class Tick:
    """One time step of the protocol on the global register."""

    kind: str
    gates: Tuple[Gate, ...] = ()
    idle: Tuple[int, ...] = ()
    resets: Tuple[Tuple[int, str], ...] = ()
    measurements: Tuple[Tuple[int, str], ...] = ()


@dataclass(frozen=True)
class Location:
    """
    A place where a fault can occur.

    Init faults act right after the reset, CX faults right after the gate, idle faults
    during the tick and measurement faults flip the recorded bit.
    """

    kind: str
    tick: int
    qubits: Tuple[int, ...]
    basis: Optional[str] = None

    def paulis(self) -> Tuple[str, ...]:
        if self.kind == CX:
            return TWO_QUBIT_PAULIS
        if self.kind == IDLE:
            return ONE_QUBIT_PAULIS
        # a flip of a Z-basis reset or readout is an X error, of an X-basis one a Z error
        return (X,) if self.basis in (ZERO, Z) else (Z,)

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind, "tick": self.tick, "qubits": list(self.qubits), "basis": self.basis}


class ProtocolSchedule:
    """
    The four preparation circuits together with the fixed verification layout.

    Attributes:
        code: The code whose |0>_L is prepared.
        circuits: Preparation circuits of blocks 1..4.
    """

    def __init__(self, code: CssCode, circuits: Sequence[PrepCircuit]):
        circuits = tuple(circuits)
        if len(circuits) != 4:
            raise ContractViolation(f"a protocol needs 4 circuits, got {len(circuits)}")
        for b, c in zip(BLOCKS, circuits):
            if c.n != code.n:
                raise ContractViolation(f"block {b} circuit has {c.n} qubits, code has {code.n}")
        self.code = code
        self.circuits = circuits
        self.n = code.n
        self.rounds = TRANSVERSAL_ROUNDS
        self.measurements = dict(MEASUREMENTS)
        self._ticks: Optional[List[Tick]] = None

    @property
    def num_qubits(self) -> int:
        return 4 * self.n

    def qubit(self, block: int, q: int) -> int:
        if block not in BLOCKS and block != 5:
            raise ContractViolation(f"no block {block}")
        return (block - 1) * self.n + q

    def block_qubits(self, block: int) -> List[int]:
        return [self.qubit(block, q) for q in range(self.n)]

    @property
    def prep_depth(self) -> int:
        return max(c.depth() for c in self.circuits)

    def cnot_depth(self) -> int:
        """Preparation layers plus the two transversal layers."""
        return self.prep_depth + len(self.rounds)

    def full_depth(self) -> int:
        """:meth:`cnot_depth` plus the initialization and measurement layers."""
        return self.cnot_depth() + 2

    def total_cnots(self) -> int:
        return sum(c.cnot_count for c in self.circuits) + self.n * sum(len(r) for r in self.rounds)

    def ticks(self) -> List[Tick]:
        """
        The layer clock shared by the simulator, the injector and the stim export.

        Every qubit that is not in a gate during a CNOT tick idles; block 1 idles during
        the measurement tick.
        """
        if self._ticks is not None:
            return list(self._ticks)
        everyone = set(range(self.num_qubits))
        ticks = [
            Tick(
                TICK_INIT,
                resets=tuple(
                    (self.qubit(b, q), basis)
                    for b, c in zip(BLOCKS, self.circuits)
                    for q, basis in enumerate(c.init)
                ),
            )
        ]
        per_block = [c.layers() for c in self.circuits]
        for layer in range(self.prep_depth):
            gates = []
            for b, blayers in zip(BLOCKS, per_block):
                if layer < len(blayers):
                    gates.extend((self.qubit(b, i), self.qubit(b, j)) for i, j in blayers[layer])
            busy = {q for g in gates for q in g}
            ticks.append(Tick(TICK_PREP, gates=tuple(gates), idle=tuple(sorted(everyone - busy))))
        for rnd in self.rounds:
            gates = [
                (self.qubit(src, q), self.qubit(dst, q)) for src, dst in rnd for q in range(self.n)
            ]
            busy = {q for g in gates for q in g}
            ticks.append(Tick(TICK_TRANSVERSAL, gates=tuple(gates), idle=tuple(sorted(everyone - busy))))
        ticks.append(
            Tick(
                TICK_MEASURE,
                idle=tuple(self.block_qubits(OUTPUT_BLOCK)),
                measurements=tuple(
                    (self.qubit(b, q), basis) for b, basis in sorted(self.measurements.items()) for q in range(self.n)
                ),
            )
        )
        self._ticks = ticks
        return list(ticks)

    def locations(self, prep_only: bool = False) -> List[Location]:
        """
        Every fault location in tick order.

        Args:
            prep_only: Keep only resets and the preparation layers.
        """
        out: List[Location] = []
        for index, tick in enumerate(self.ticks()):
            if prep_only and tick.kind not in (TICK_INIT, TICK_PREP):
                break
            out.extend(Location(INIT, index, (q,), basis) for q, basis in tick.resets)
            out.extend(Location(CX, index, gate) for gate in tick.gates)
            out.extend(Location(IDLE, index, (q,)) for q in tick.idle)
            out.extend(Location(MEAS, index, (q,), basis) for q, basis in tick.measurements)
        return out

    def location_counts(self) -> Dict[str, int]:
        counts = {INIT: 0, CX: 0, IDLE: 0, MEAS: 0}
        for tick in self.ticks():
            counts[INIT] += len(tick.resets)
            counts[CX] += len(tick.gates)
            counts[IDLE] += len(tick.idle)
            counts[MEAS] += len(tick.measurements)
        return counts

    def summary(self) -> Dict[str, object]:
        return {
            "code": self.code.name,
            "qubits": self.num_qubits,
            "cnots": [c.cnot_count for c in self.circuits],
            "depths": [c.depth() for c in self.circuits],
            "total_cnots": self.total_cnots(),
            "cnot_depth": self.cnot_depth(),
            "full_depth": self.full_depth(),
        }

    def __repr__(self) -> str:
        return f"ProtocolSchedule({self.code.name}, depth={self.cnot_depth()})"


def build_protocol(
    c1: PrepCircuit, c2: PrepCircuit, c3: PrepCircuit, c4: PrepCircuit, code: CssCode, check: bool = True
) -> ProtocolSchedule:
    """
    Assemble the verified preparation of |0>_L.

    Raises:
        ContractViolation: If the circuits differ in size from the code, or (with
            ``check``) one of them does not prepare |0>_L.
    """
    circuits = (c1, c2, c3, c4)
    for b, c in zip(BLOCKS, circuits):
        if c.n != code.n:
            raise ContractViolation(f"block {b} circuit has {c.n} qubits, code has {code.n}")
        if check and not verify_prepares(c, code):
            raise ContractViolation(f"block {b} circuit does not prepare |0>_L of {code.name}")
    schedule = ProtocolSchedule(code, circuits)
    logger.debug("built protocol %s", schedule.summary())
    return schedule


def _parity(rows, bits: int) -> bool:
    return any((r & bits).bit_count() & 1 for r in rows)


def acceptance(code: CssCode, m2: BitVector, m3: BitVector, m4: BitVector) -> bool:
    """
    True iff every stabilizer and logical parity of the measured blocks is trivial.

    Records are flips relative to the noiseless outcome; for the X-basis block the
    all-zero record is the +1 reference.
    """
    for m in (m2, m3, m4):
        if m.length != code.n:
            raise ContractViolation(f"measurement of length {m.length} for n={code.n}")
    z_rows = code.h_z.row_ints() + code.logicals_z.row_ints()
    x_rows = code.h_x.row_ints() + code.logicals_x.row_ints()
    return not (_parity(z_rows, m2.bits) or _parity(x_rows, m3.bits) or _parity(z_rows, m4.bits))


def serialize_protocol(schedule: ProtocolSchedule) -> str:
    lines = [f"# verified |0>_L preparation, {schedule.code.name} {schedule.code.label()}"]
    lines.append(f"CODE {schedule.code.name}")
    for b, c in zip(BLOCKS, schedule.circuits):
        lines.append(f"BLOCK {b}")
        lines.extend(circuit_lines(c))
    for rnd in schedule.rounds:
        lines.extend(f"TCX {src} {dst}" for src, dst in rnd)
    lines.extend(f"MEAS {b} {basis}" for b, basis in sorted(schedule.measurements.items()))
    return "\n".join(lines) + "\n"


def parse_protocol(text: str, code: Optional[CssCode] = None) -> ProtocolSchedule:
    """
    Parse the protocol text format.

    Without ``code`` the ``CODE`` line is resolved in the registry.

    Raises:
        ProtocolParseError: With the offending line number.
    """
    from steaneChef.core.codes.registry import registry_lookup

    code_name = None
    blocks: Dict[int, list] = {}
    current: Optional[int] = None
    tcx: List[Tuple[int, int, int]] = []
    meas: List[Tuple[int, str, int]] = []
    for number, line in numbered_lines(text):
        parts = line.split()
        op = parts[0].upper()
        if op == "CODE":
            if len(parts) != 2:
                raise ProtocolParseError("CODE takes one name", number)
            code_name = parts[1]
        elif op == "BLOCK":
            if len(parts) != 2 or parts[1] not in ("1", "2", "3", "4"):
                raise ProtocolParseError("BLOCK takes a number from 1 to 4", number)
            current = int(parts[1])
            if current in blocks:
                raise ProtocolParseError(f"block {current} given twice", number)
            blocks[current] = []
        elif op == "TCX":
            if len(parts) != 3:
                raise ProtocolParseError("TCX takes two block numbers", number)
            tcx.append((_int(parts[1], number, ProtocolParseError), _int(parts[2], number, ProtocolParseError), number))
            current = None
        elif op == "MEAS":
            if len(parts) != 3 or parts[2].upper() not in (X, Z):
                raise ProtocolParseError("MEAS takes a block and X or Z", number)
            meas.append((_int(parts[1], number, ProtocolParseError), parts[2].upper(), number))
            current = None
        else:
            if current is None:
                raise ProtocolParseError(f"{op} outside a BLOCK section", number)
            blocks[current].append((number, line))
    missing = [b for b in BLOCKS if b not in blocks]
    if missing:
        raise ProtocolParseError(f"missing BLOCK section(s) {missing}")
    expected_tcx = [pair for rnd in TRANSVERSAL_ROUNDS for pair in rnd]
    if [(a, b) for a, b, _ in tcx] != expected_tcx:
        line = tcx[0][2] if tcx else None
        raise ProtocolParseError(f"transversal rounds must be {expected_tcx}", line)
    if {b: basis for b, basis, _ in meas} != MEASUREMENTS or len(meas) != len(MEASUREMENTS):
        line = meas[0][2] if meas else None
        raise ProtocolParseError("measurements must be MEAS 2 Z, MEAS 3 X, MEAS 4 Z", line)
    circuits = [parse_circuit_lines(blocks[b], ProtocolParseError) for b in BLOCKS]
    if code is None:
        if code_name is None:
            raise ProtocolParseError("missing CODE line")
        code = registry_lookup(code_name)
    return build_protocol(*circuits, code=code, check=False)
