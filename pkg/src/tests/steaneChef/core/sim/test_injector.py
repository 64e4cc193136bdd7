import numpy as np
import pytest

from steaneChef.core.codes import X
from steaneChef.core.faults import PauliError, weight_leq
from steaneChef.core.ftcheck import verify_quadruple
from steaneChef.core.protocol import build_protocol
from steaneChef.core.sim import FaultEffectTable, exhaustive_inject, inject_faults, witness_faults
from steaneChef.core.sim.injector import combination_count
from steaneChef.core.synth import greedy_synth, synth_quadruple
from steaneChef.utils.errors import BudgetExceededError, ContractViolation


@pytest.fixture
def cc17_copies(cc17):
    c1 = greedy_synth(cc17)
    return c1, build_protocol(c1, c1, c1, c1, cc17)


def test_combination_count():
    assert combination_count([2, 3], 0) == 1
    assert combination_count([2, 3], 1) == 5
    assert combination_count([2, 3], 2) == 6
    assert combination_count([15, 15, 3], 2) == 15 * 15 + 2 * 15 * 3
    assert combination_count([2, 3], 3) == 0


def test_table_is_linear(steane_protocol):
    table = FaultEffectTable(steane_protocol)
    assert len(table) == sum(table.pauli_counts())
    assert table.combine([]) == (0, 0, 0)
    rng = np.random.default_rng(1)
    for _ in range(40):
        i, j = (int(v) for v in rng.choice(len(table), size=2, replace=False))
        if table.location_index[i] == table.location_index[j]:
            continue
        record = inject_faults(steane_protocol, [table.options[i], table.options[j]])
        assert (table.combine([i, j])[0] == 0) == record.accepted


def test_steane_single_faults(steane_protocol):
    report = exhaustive_inject(steane_protocol, 1)
    assert report.ok
    assert report.combinations[1] == sum(len(loc.paulis()) for loc in steane_protocol.locations())
    assert 0 < report.accepted[1] < report.combinations[1]
    assert report.to_dict()["ok"] is True


def test_prep_only_locations(steane_protocol):
    report = exhaustive_inject(steane_protocol, 1, prep_only=True)
    assert report.locations == len(steane_protocol.locations(prep_only=True))
    assert report.prep_only


def test_zero_faults(steane_protocol):
    report = exhaustive_inject(steane_protocol, 0)
    assert report.ok
    assert report.combinations == {}


def test_negative_fault_count(steane_protocol):
    with pytest.raises(ContractViolation):
        exhaustive_inject(steane_protocol, -1)


def test_budget(steane_protocol):
    with pytest.raises(BudgetExceededError) as info:
        exhaustive_inject(steane_protocol, 2, budget=10)
    assert info.value.combinations > 10


def test_witness_replays_to_heavy_residual(cc17, cc17_copies):
    c1, schedule = cc17_copies
    witness = verify_quadruple(c1, c1, c1, c1, cc17).conditions[0].witness
    faults = witness_faults(schedule, witness)
    assert len(faults) == len(witness.subset_1) + len(witness.subset_2)
    record = inject_faults(schedule, faults)
    assert record.accepted
    assert not weight_leq(PauliError(X, record.residual_x), len(faults), cc17)


@pytest.mark.slow
def test_greedy_copies_have_counterexamples(cc17_copies):
    _, schedule = cc17_copies
    report = exhaustive_inject(schedule, 2, prep_only=True, budget=10**9)
    assert not report.ok


@pytest.mark.slow
def test_synthesized_cc17_protocol_is_fault_tolerant(cc17):
    result = synth_quadruple(cc17)
    schedule = build_protocol(*result.circuits, cc17)
    report = exhaustive_inject(schedule, 2, budget=10**9)
    assert report.ok, report.counterexamples[:3]
