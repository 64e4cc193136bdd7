import pytest

from steaneChef.core.circuit import verify_prepares
from steaneChef.core.codes import X, Z
from steaneChef.core.faults import fault_set
from steaneChef.core.ftcheck import is_t_distinct
from steaneChef.core.ftcheck.distinctness import ReferenceIndex
from steaneChef.core.synth import GuidedSynthesizer, SynthConfig, greedy_synth, guided_synth
from steaneChef.core.synth.guided import FaultTracker, substructure_table
from steaneChef.utils.errors import SynthesisExhaustedError


def test_unguided_run_matches_greedy(cc17):
    cfg = SynthConfig(seed=4, perturbation_prob=0.0)
    result = GuidedSynthesizer(cc17, 2, cfg).run()
    assert result.circuit == greedy_synth(cc17, cfg)
    assert result.stats.backtracks == 0
    assert result.stats.restarts == 0


def test_tracker_matches_fault_set(steane, steane_prep):
    for basis in (X, Z):
        tracker = FaultTracker(basis, steane)
        for gate in reversed(steane_prep.gates):
            tracker.push(gate)
        assert tracker.fault_set(7) == fault_set(steane_prep, basis)


def test_tracker_pop_undoes_push(steane, steane_prep):
    tracker = FaultTracker(X, steane)
    gates = list(reversed(steane_prep.gates))
    for gate in gates[:4]:
        tracker.push(gate)
    snapshot = (list(tracker.props), list(tracker.own), list(tracker.keys))
    tracker.push(gates[4])
    tracker.pop(gates[4])
    assert (tracker.props, tracker.own, tracker.keys) == snapshot


def test_guided_output_is_distinct_to_reference(cc17):
    cfg = SynthConfig(seed=1)
    c1 = greedy_synth(cc17, cfg)
    ref = fault_set(c1, X)
    result = GuidedSynthesizer(cc17, 2, cfg, refs={X: ref}, ref_circuits={X: [c1]}, stage="C2").run()
    c2 = result.circuit
    assert verify_prepares(c2, cc17)
    assert is_t_distinct(fault_set(c2, X), ref, 2, cc17) is True
    assert result.fault_sets[X] == fault_set(c2, X)
    assert result.fault_sets[Z] == fault_set(c2, Z)
    assert result.stats.gates == c2.cnot_count


def test_guided_synth_wrapper(steane, steane_prep):
    c = guided_synth(steane, fault_set(steane_prep, X), None, 1)
    assert verify_prepares(c, steane)


def test_exhaustion_reports_stage(monkeypatch, steane, steane_prep):
    monkeypatch.setattr(ReferenceIndex, "accepts", lambda self, existing, new: False)
    cfg = SynthConfig(max_restarts=2)
    synth = GuidedSynthesizer(steane, 1, cfg, refs={X: fault_set(steane_prep, X)}, stage="C2")
    with pytest.raises(SynthesisExhaustedError) as info:
        synth.run()
    assert info.value.stage == "C2"
    assert info.value.stats["restarts"] == 2
    assert info.value.exit_code == 3


def test_substructure_table_entries_are_later_gates(steane, steane_prep):
    for basis in (X, Z):
        table = substructure_table(steane, steane_prep, basis)
        for gate, follows in table.items():
            assert gate in steane_prep.gates
            for later, shared in follows:
                assert later in steane_prep.gates
                assert steane_prep.index_of(later) > steane_prep.index_of(gate)
                assert shared in gate and shared in later
