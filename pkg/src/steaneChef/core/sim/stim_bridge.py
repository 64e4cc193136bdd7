"""
stim interop.

:func:`to_stim_circuit` exports the noisy protocol for external sampling and
:func:`tableau_replay` replays explicit faults on ``stim.TableauSimulator``; the latter
is the reference the frame simulator is checked against.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import stim

from steaneChef.core.circuit.prep_circuit import ZERO
from steaneChef.core.codes.css_code import X, Z, CssCode
from steaneChef.core.protocol.schedule import MEAS, OUTPUT_BLOCK, ProtocolSchedule
from steaneChef.core.sim.frame_simulator import Fault, ShotRecord, compile_faults
from steaneChef.core.sim.noise import NoiseModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParityRecord:
    """
    Parities whose noiseless value is fixed, as 0/1 tuples.

    ``detectors`` lists block 2 against H_Z and L_Z, block 3 against H_X, then block 4
    against H_Z and L_Z. ``block1_x`` is block 1's H_Z and L_Z syndrome and ``block1_z``
    its H_X syndrome.
    """

    detectors: Tuple[int, ...]
    block1_x: Tuple[int, ...]
    block1_z: Tuple[int, ...]


def _rows(matrix) -> List[List[int]]:
    return [row.support() for row in matrix]


def _parities(rows: Sequence[Sequence[int]], bits: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(bits[q] for q in row) & 1 for row in rows)


def frame_parities(code: CssCode, record: ShotRecord) -> ParityRecord:
    """The :class:`ParityRecord` implied by a frame-simulated shot."""
    z_rows = _rows(code.h_z) + _rows(code.logicals_z)
    x_rows = _rows(code.h_x)
    m2, m3, m4 = record.m2.to_list(), record.m3.to_list(), record.m4.to_list()
    return ParityRecord(
        detectors=_parities(z_rows, m2) + _parities(x_rows, m3) + _parities(z_rows, m4),
        block1_x=_parities(z_rows, record.residual_x.to_list()),
        block1_z=_parities(x_rows, record.residual_z.to_list()),
    )


def _targets(records: Sequence[int], total: int) -> List[stim.GateTarget]:
    return [stim.target_rec(r - total) for r in records]


def to_stim_circuit(schedule: ProtocolSchedule, noise: NoiseModel) -> stim.Circuit:
    """
    The protocol as a stim circuit.

    Detectors cover the deterministic acceptance parities; block 1 is read out in the Z
    basis at the end and its logical Z operators become observables.
    """
    code = schedule.code
    circuit = stim.Circuit()
    p = noise.p
    flip = noise.prep_meas_flip
    measured: Dict[Tuple[int, int], int] = {}
    count = 0
    for tick in schedule.ticks():
        if tick.resets:
            zeros = [q for q, b in tick.resets if b == ZERO]
            pluses = [q for q, b in tick.resets if b != ZERO]
            if zeros:
                circuit.append("R", zeros)
            if pluses:
                circuit.append("RX", pluses)
            if flip > 0:
                if zeros:
                    circuit.append("X_ERROR", zeros, flip)
                if pluses:
                    circuit.append("Z_ERROR", pluses, flip)
        if tick.gates:
            flat = [q for gate in tick.gates for q in gate]
            circuit.append("CX", flat)
            if p > 0:
                circuit.append("DEPOLARIZE2", flat, p)
        if tick.idle and noise.idle_depol > 0:
            circuit.append("DEPOLARIZE1", list(tick.idle), noise.idle_depol)
        for basis in (Z, X):
            qubits = [q for q, b in tick.measurements if b == basis]
            if qubits:
                circuit.append("M" if basis == Z else "MX", qubits, flip)
                for q in qubits:
                    measured[(q // schedule.n + 1, q % schedule.n)] = count
                    count += 1
        circuit.append("TICK")
    block1 = schedule.block_qubits(OUTPUT_BLOCK)
    circuit.append("M", block1)
    for q in range(schedule.n):
        measured[(OUTPUT_BLOCK, q)] = count
        count += 1

    z_rows = _rows(code.h_z) + _rows(code.logicals_z)
    for block, rows in ((2, z_rows), (3, _rows(code.h_x)), (4, z_rows)):
        for row in rows:
            circuit.append("DETECTOR", _targets([measured[(block, q)] for q in row], count))
    for index, row in enumerate(_rows(code.logicals_z)):
        circuit.append("OBSERVABLE_INCLUDE", _targets([measured[(OUTPUT_BLOCK, q)] for q in row], count), index)
    logger.debug("stim circuit for %s: %d measurements", code.name, count)
    return circuit


def _expectation_bit(sim: stim.TableauSimulator, width: int, qubits: Sequence[int], pauli: str) -> int:
    observable = stim.PauliString(width)
    for q in qubits:
        observable[q] = pauli
    value = sim.peek_observable_expectation(observable)
    if value == 0:
        raise RuntimeError(f"parity {pauli}{list(qubits)} is not deterministic")
    return 0 if value > 0 else 1


def tableau_replay(schedule: ProtocolSchedule, faults: Sequence[Fault]) -> ParityRecord:
    """
    Run ``schedule`` on a stabilizer tableau with exactly ``faults``.

    Measurement faults flip the recorded bit; block 1 parities are read with
    non-destructive expectation values.
    """
    code = schedule.code
    n = schedule.n
    width = schedule.num_qubits
    injections = compile_faults(schedule, faults)
    flips = {loc.qubits[0] for loc, _ in faults if loc.kind == MEAS}
    sim = stim.TableauSimulator()
    sim.set_num_qubits(width)
    outcomes: Dict[int, int] = {}

    def apply(tick_index: int) -> None:
        for inj in injections.get(tick_index, ()):
            for q, xb, zb in zip(inj.qubits.tolist(), inj.xs.tolist(), inj.zs.tolist()):
                if xb and zb:
                    sim.y(q)
                elif xb:
                    sim.x(q)
                elif zb:
                    sim.z(q)

    for index, tick in enumerate(schedule.ticks()):
        for q, basis in tick.resets:
            if basis != ZERO:
                sim.h(q)
        for c, t in tick.gates:
            sim.cnot(c, t)
        apply(index)
        for q, basis in tick.measurements:
            if basis == X:
                sim.h(q)
            outcomes[q] = int(sim.measure(q)) ^ (1 if q in flips else 0)

    def block_bits(block: int) -> List[int]:
        return [outcomes[(block - 1) * n + q] for q in range(n)]

    z_rows = _rows(code.h_z) + _rows(code.logicals_z)
    x_rows = _rows(code.h_x)
    detectors = _parities(z_rows, block_bits(2)) + _parities(x_rows, block_bits(3)) + _parities(z_rows, block_bits(4))
    block1 = schedule.block_qubits(OUTPUT_BLOCK)
    block1_x = tuple(_expectation_bit(sim, width, [block1[q] for q in row], "Z") for row in z_rows)
    block1_z = tuple(_expectation_bit(sim, width, [block1[q] for q in row], "X") for row in x_rows)
    return ParityRecord(detectors, block1_x, block1_z)

