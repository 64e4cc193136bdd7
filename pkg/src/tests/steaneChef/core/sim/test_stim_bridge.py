import numpy as np

from steaneChef.core.sim import NoiseModel, frame_parities, inject_faults, tableau_replay, to_stim_circuit


def _options(schedule):
    return [(loc, p) for loc in schedule.locations() for p in loc.paulis()]


def test_circuit_shape(steane, steane_protocol):
    circuit = to_stim_circuit(steane_protocol, NoiseModel(0.001))
    assert circuit.num_qubits == 28
    assert circuit.num_detectors == 2 * (steane.m_z + steane.k) + steane.m_x
    assert circuit.num_observables == steane.k
    # raises if a detector or observable is not deterministic
    circuit.detector_error_model()


def test_noiseless_circuit_fires_nothing(steane_protocol):
    circuit = to_stim_circuit(steane_protocol, NoiseModel(0.0))
    detections = circuit.compile_detector_sampler().sample(shots=20)
    assert not np.asarray(detections).any()


def test_noiseless_replay(steane_protocol):
    record = tableau_replay(steane_protocol, [])
    assert not any(record.detectors + record.block1_x + record.block1_z)


def test_single_faults_match_tableau(steane, steane_protocol):
    for fault in _options(steane_protocol):
        frame = frame_parities(steane, inject_faults(steane_protocol, [fault]))
        assert frame == tableau_replay(steane_protocol, [fault]), fault


def test_fault_pairs_match_tableau(steane, steane_protocol):
    options = _options(steane_protocol)
    rng = np.random.default_rng(0)
    checked = 0
    while checked < 150:
        i, j = rng.choice(len(options), size=2, replace=False)
        if options[i][0] == options[j][0]:
            continue
        faults = [options[i], options[j]]
        assert frame_parities(steane, inject_faults(steane_protocol, faults)) == tableau_replay(
            steane_protocol, faults
        ), faults
        checked += 1
