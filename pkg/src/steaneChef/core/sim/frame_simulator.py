"""
Pauli-frame simulation of the verified preparation protocol.

Frames are boolean ``(qubits, shots)`` arrays, one for X and one for Z components. A
CNOT copies X from control to target and Z from target to control. Measurement
records hold the flip relative to the noiseless outcome; Z-basis readouts see the X
frame, X-basis readouts the Z frame.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from steaneChef.core.circuit.prep_circuit import ZERO
from steaneChef.core.codes.css_code import X, Z, CssCode
from steaneChef.core.gf2 import BitVector
from steaneChef.core.protocol.schedule import (
    CX,
    MEAS,
    OUTPUT_BLOCK,
    TWO_QUBIT_PAULIS,
    Location,
    ProtocolSchedule,
)
from steaneChef.core.sim.noise import NoiseModel
from steaneChef.utils.errors import ContractViolation

logger = logging.getLogger(__name__)

Fault = Tuple[Location, str]
RngLike = Union[None, int, np.random.Generator]

# X / Z components of the 15 two-qubit Paulis, for control and target
_CX_CTRL_X = np.array([p[0] in "XY" for p in TWO_QUBIT_PAULIS])
_CX_CTRL_Z = np.array([p[0] in "YZ" for p in TWO_QUBIT_PAULIS])
_CX_TGT_X = np.array([p[1] in "XY" for p in TWO_QUBIT_PAULIS])
_CX_TGT_Z = np.array([p[1] in "YZ" for p in TWO_QUBIT_PAULIS])


def pauli_bits(pauli: str) -> Tuple[bool, bool]:
    if pauli not in ("I", "X", "Y", "Z"):
        raise ContractViolation(f"unknown Pauli {pauli!r}")
    return pauli in "XY", pauli in "YZ"


def parity_rows(matrix: np.ndarray, bits: np.ndarray) -> np.ndarray:
    """``matrix · bits`` over GF(2) for a ``(rows, n)`` matrix and ``(n, shots)`` bits."""
    if matrix.shape[0] == 0:
        return np.zeros((0, bits.shape[1]), dtype=bool)
    return ((matrix.astype(np.int64) @ bits.astype(np.int64)) & 1).astype(bool)


def syndrome_ints(parities: np.ndarray) -> np.ndarray:
    """Pack ``(rows, shots)`` parities into one integer per shot, row ``i`` as bit ``i``."""
    weights = np.left_shift(np.int64(1), np.arange(parities.shape[0], dtype=np.int64))
    return (parities.astype(np.int64) * weights[:, None]).sum(axis=0)


@dataclass
class FrameBatch:
    """
    Outcome of a batch of shots.

    Attributes:
        record: Measurement flips, ``(qubits, shots)``; only measured rows are meaningful.
        x: Final X frame.
        z: Final Z frame.
        gadget_record: X-basis readout flips of block 1 in the estimation gadget.
        gadget_z: Final Z frame of the |+>_L block of the gadget.
    """

    n: int
    record: np.ndarray
    x: np.ndarray
    z: np.ndarray
    gadget_record: Optional[np.ndarray] = None
    gadget_z: Optional[np.ndarray] = None

    @property
    def shots(self) -> int:
        return self.record.shape[1]

    def _rows(self, block: int) -> slice:
        return slice((block - 1) * self.n, block * self.n)

    def measured(self, block: int) -> np.ndarray:
        return self.record[self._rows(block)]

    @property
    def residual_x(self) -> np.ndarray:
        return self.x[self._rows(OUTPUT_BLOCK)]

    @property
    def residual_z(self) -> np.ndarray:
        return self.z[self._rows(OUTPUT_BLOCK)]


class AcceptanceChecks:
    """Parity matrices of the post-selection rule for one code."""

    def __init__(self, code: CssCode):
        self.code = code
        self.h_z = code.h_z.to_array()
        self.h_x = code.h_x.to_array()
        self.l_z = code.logicals_z.to_array()
        self.l_x = code.logicals_x.to_array()
        self.z_rows = np.vstack([self.h_z, self.l_z])
        self.x_rows = np.vstack([self.h_x, self.l_x])

    def signature(self, batch: FrameBatch) -> np.ndarray:
        """
        All acceptance parities, ``(rows, shots)``: block 2 against the Z checks and
        logicals, block 3 against the X ones, block 4 against the Z ones.
        """
        return np.vstack(
            [
                parity_rows(self.z_rows, batch.measured(2)),
                parity_rows(self.x_rows, batch.measured(3)),
                parity_rows(self.z_rows, batch.measured(4)),
            ]
        )

    def accepted(self, batch: FrameBatch) -> np.ndarray:
        return ~self.signature(batch).any(axis=0)


@dataclass
class _CompiledTick:
    zero_resets: np.ndarray
    plus_resets: np.ndarray
    ctrl: np.ndarray
    tgt: np.ndarray
    idle: np.ndarray
    measure_z: np.ndarray
    measure_x: np.ndarray


@dataclass
class _Injection:
    shots: np.ndarray
    qubits: np.ndarray
    xs: np.ndarray
    zs: np.ndarray
    flips: np.ndarray


def _ints(values: Iterable[int]) -> np.ndarray:
    return np.array(list(values), dtype=np.int64)


class FrameSimulator:
    """
    Batched frame simulator over the tick clock of a :class:`ProtocolSchedule`.

    Faults of one tick act after its gates and before its measurements.
    """

    def __init__(self, schedule: ProtocolSchedule, noise: Optional[NoiseModel] = None):
        self.schedule = schedule
        self.code = schedule.code
        self.n = schedule.n
        self.noise = noise or NoiseModel.noiseless()
        self.checks = AcceptanceChecks(self.code)
        self._ticks = schedule.ticks()
        self._compiled = [self._compile(t) for t in self._ticks]
        self._locations = None
        self.logger = logging.getLogger(__name__)

    @staticmethod
    def _compile(tick) -> _CompiledTick:
        return _CompiledTick(
            zero_resets=_ints(q for q, b in tick.resets if b == ZERO),
            plus_resets=_ints(q for q, b in tick.resets if b != ZERO),
            ctrl=_ints(c for c, _ in tick.gates),
            tgt=_ints(t for _, t in tick.gates),
            idle=_ints(tick.idle),
            measure_z=_ints(q for q, b in tick.measurements if b == Z),
            measure_x=_ints(q for q, b in tick.measurements if b == X),
        )

    @property
    def locations(self) -> List[Location]:
        if self._locations is None:
            self._locations = self.schedule.locations()
        return self._locations

    def _flip(self, rng: np.random.Generator, prob: float, shape) -> np.ndarray:
        return rng.random(shape) < prob

    def _cx_noise(self, x, z, ctrl, tgt, rng, shots) -> None:
        p = self.noise.two_qubit_depol
        r = rng.random((len(ctrl), shots))
        hit = r < p
        k = np.minimum(r * (len(TWO_QUBIT_PAULIS) / p), len(TWO_QUBIT_PAULIS) - 1).astype(np.int64)
        x[ctrl] ^= hit & _CX_CTRL_X[k]
        z[ctrl] ^= hit & _CX_CTRL_Z[k]
        x[tgt] ^= hit & _CX_TGT_X[k]
        z[tgt] ^= hit & _CX_TGT_Z[k]

    @staticmethod
    def _single_qubit_noise(x, z, qubits, rng, shots, p) -> None:
        r = rng.random((len(qubits), shots))
        hit = r < p
        k = np.minimum(r * (3 / p), 2).astype(np.int64)
        # 0: X, 1: Y, 2: Z
        x[qubits] ^= hit & (k <= 1)
        z[qubits] ^= hit & (k >= 1)

    def run(
        self,
        shots: int,
        rng: RngLike = None,
        injections: Optional[Dict[int, List[_Injection]]] = None,
        gadget: bool = False,
    ) -> FrameBatch:
        """
        Simulate ``shots`` shots.

        Noise is sampled only when ``rng`` is given and the model is not noiseless.

        Args:
            shots: Batch size.
            rng: Generator or seed.
            injections: Explicit faults per tick, see :func:`compile_faults`.
            gadget: Append the |+>_L estimation gadget on block 5.
        """
        if shots < 0:
            raise ContractViolation("negative shot count")
        sampling = rng is not None and not self.noise.is_noiseless
        rng = np.random.default_rng(rng) if sampling else None
        width = self.schedule.num_qubits
        x = np.zeros((width, shots), dtype=bool)
        z = np.zeros((width, shots), dtype=bool)
        record = np.zeros((width, shots), dtype=bool)
        flip = self.noise.prep_meas_flip

        for index, compiled in enumerate(self._compiled):
            if sampling and compiled.zero_resets.size:
                x[compiled.zero_resets] ^= self._flip(rng, flip, (len(compiled.zero_resets), shots))
            if sampling and compiled.plus_resets.size:
                z[compiled.plus_resets] ^= self._flip(rng, flip, (len(compiled.plus_resets), shots))
            if compiled.ctrl.size:
                x[compiled.tgt] ^= x[compiled.ctrl]
                z[compiled.ctrl] ^= z[compiled.tgt]
                if sampling:
                    self._cx_noise(x, z, compiled.ctrl, compiled.tgt, rng, shots)
            if sampling and compiled.idle.size:
                self._single_qubit_noise(x, z, compiled.idle, rng, shots, self.noise.idle_depol)
            pending = injections.get(index, ()) if injections else ()
            for inj in pending:
                np.bitwise_xor.at(x, (inj.qubits, inj.shots), inj.xs)
                np.bitwise_xor.at(z, (inj.qubits, inj.shots), inj.zs)
            if compiled.measure_z.size:
                record[compiled.measure_z] = x[compiled.measure_z]
            if compiled.measure_x.size:
                record[compiled.measure_x] = z[compiled.measure_x]
            measured = np.concatenate([compiled.measure_z, compiled.measure_x])
            if sampling and measured.size:
                record[measured] ^= self._flip(rng, flip, (len(measured), shots))
            for inj in pending:
                np.bitwise_xor.at(record, (inj.qubits, inj.shots), inj.flips)

        batch = FrameBatch(self.n, record, x, z)
        if gadget:
            self._run_gadget(batch, rng, sampling)
        return batch

    def _run_gadget(self, batch: FrameBatch, rng, sampling: bool) -> None:
        """Copy Z errors of block 1 and an ideal, depolarized |+>_L block onto block 1's X readout."""
        shots = batch.shots
        x1 = batch.residual_x.copy()
        z1 = batch.residual_z.copy()
        x5 = np.zeros((self.n, shots), dtype=bool)
        z5 = np.zeros((self.n, shots), dtype=bool)
        if sampling:
            everyone = np.arange(self.n)
            self._single_qubit_noise(x5, z5, everyone, rng, shots, self.noise.data_depol)
        # transversal CX, block 1 controls, block 5 targets
        x5 ^= x1
        z1 ^= z5
        if sampling:
            stacked_x = np.vstack([x1, x5])
            stacked_z = np.vstack([z1, z5])
            ctrl = np.arange(self.n)
            self._cx_noise(stacked_x, stacked_z, ctrl, ctrl + self.n, rng, shots)
            x1, x5 = stacked_x[: self.n], stacked_x[self.n:]
            z1, z5 = stacked_z[: self.n], stacked_z[self.n:]
        readout = z1.copy()
        if sampling:
            readout ^= self._flip(rng, self.noise.prep_meas_flip, readout.shape)
        batch.gadget_record = readout
        batch.gadget_z = z5


def compile_faults(
    schedule: ProtocolSchedule, faults: Sequence[Fault], shot: int = 0, known: Optional[set] = None
) -> Dict[int, List[_Injection]]:
    """
    Turn ``(location, pauli)`` pairs into per-tick injections on one shot.

    Raises:
        ContractViolation: For unknown locations, inadmissible Paulis or a location
            used twice.
    """
    known = known if known is not None else set(schedule.locations())
    seen = set()
    rows: Dict[int, List[Tuple[int, bool, bool, bool]]] = defaultdict(list)
    for location, pauli in faults:
        if location not in known:
            raise ContractViolation(f"no fault location {location}")
        if pauli not in location.paulis():
            raise ContractViolation(f"{pauli} is not a fault at {location.kind} location {location.qubits}")
        if location in seen:
            raise ContractViolation(f"two faults at {location}")
        seen.add(location)
        if location.kind == MEAS:
            rows[location.tick].append((location.qubits[0], False, False, True))
        elif location.kind == CX:
            for q, p in zip(location.qubits, pauli):
                xb, zb = pauli_bits(p)
                rows[location.tick].append((q, xb, zb, False))
        else:
            xb, zb = pauli_bits(pauli)
            rows[location.tick].append((location.qubits[0], xb, zb, False))
    return {tick: [_injection_from_rows(entries, shot)] for tick, entries in rows.items()}


def _injection_from_rows(entries, shot: int) -> _Injection:
    return _Injection(
        shots=np.full(len(entries), shot, dtype=np.int64),
        qubits=_ints(e[0] for e in entries),
        xs=np.array([e[1] for e in entries], dtype=bool),
        zs=np.array([e[2] for e in entries], dtype=bool),
        flips=np.array([e[3] for e in entries], dtype=bool),
    )


def merge_injections(parts: Iterable[Dict[int, List[_Injection]]]) -> Dict[int, List[_Injection]]:
    out: Dict[int, List[_Injection]] = defaultdict(list)
    for part in parts:
        for tick, injections in part.items():
            out[tick].extend(injections)
    return dict(out)


def _column(arr: np.ndarray, shot: int) -> BitVector:
    return BitVector.from_support(arr.shape[0], np.flatnonzero(arr[:, shot]).tolist())


@dataclass
class ShotRecord:
    """Measured blocks and the residual frame of block 1 for one shot."""

    m2: BitVector
    m3: BitVector
    m4: BitVector
    residual_x: BitVector
    residual_z: BitVector
    accepted: bool

    @classmethod
    def from_batch(cls, batch: FrameBatch, checks: AcceptanceChecks, shot: int = 0) -> "ShotRecord":
        accepted = bool(checks.accepted(batch)[shot])
        return cls(
            m2=_column(batch.measured(2), shot),
            m3=_column(batch.measured(3), shot),
            m4=_column(batch.measured(4), shot),
            residual_x=_column(batch.residual_x, shot),
            residual_z=_column(batch.residual_z, shot),
            accepted=accepted,
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            "m2": self.m2.support(),
            "m3": self.m3.support(),
            "m4": self.m4.support(),
            "residual_x": self.residual_x.support(),
            "residual_z": self.residual_z.support(),
            "accepted": self.accepted,
        }


def run_shot(schedule: ProtocolSchedule, noise: NoiseModel, rng: RngLike = None) -> ShotRecord:
    """Sample one noisy shot of ``schedule``."""
    sim = FrameSimulator(schedule, noise)
    return ShotRecord.from_batch(sim.run(1, rng if rng is not None else np.random.default_rng()), sim.checks)


def inject_faults(schedule: ProtocolSchedule, faults: Sequence[Fault]) -> ShotRecord:
    """Run ``schedule`` once with exactly ``faults`` and no sampled noise."""
    sim = FrameSimulator(schedule)
    batch = sim.run(1, injections=compile_faults(schedule, faults))
    return ShotRecord.from_batch(batch, sim.checks)
