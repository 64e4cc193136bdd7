import pytest

from steaneChef.core.circuit import verify_prepares
from steaneChef.core.gf2 import BitMatrix
from steaneChef.core.synth import EliminationState, SynthConfig, cost, greedy_synth
from steaneChef.utils.errors import ContractViolation


def test_cost_counts_entries_after_column_add():
    h = BitMatrix.from_strings(["110", "011"])
    assert h.nnz == 4
    assert cost(h, (0, 1)) == 3
    assert cost(h, (1, 0)) == 4
    assert cost(h, (2, 0)) == 5


def test_cost_rejects_bad_gates():
    h = BitMatrix.from_strings(["110", "011"])
    with pytest.raises(ContractViolation):
        cost(h, (1, 1))
    with pytest.raises(ContractViolation):
        cost(h, (0, 3))


def test_product_state_needs_no_gates():
    state = EliminationState(BitMatrix.from_strings(["100", "010"]))
    assert state.is_reduced()
    c = state.circuit()
    assert c.cnot_count == 0
    assert c.plus_qubits == [0, 1]


def test_apply_and_undo_restore_columns(steane):
    state = EliminationState(steane.h_x)
    before = list(state.cols)
    tiers = state.reducing_tiers()
    gate = tiers[min(tiers)][0]
    state.apply(gate)
    assert state.nnz < steane.h_x.nnz
    assert set(gate) <= state.used
    state.undo()
    assert state.cols == before


def test_unfinished_elimination_has_no_circuit(steane):
    with pytest.raises(ContractViolation):
        EliminationState(steane.h_x).circuit()


def test_greedy_steane_prepares_zero(steane):
    c = greedy_synth(steane)
    assert verify_prepares(c, steane)
    assert len(c.plus_qubits) == steane.m_x
    assert 0 < c.cnot_count <= 12


@pytest.mark.parametrize("name", ["cc_4_8_8_17", "cc_6_6_6_19", "surface_9"])
def test_greedy_registry_codes(name):
    from steaneChef.core.codes import registry_lookup

    code = registry_lookup(name)
    c = greedy_synth(code, SynthConfig(seed=5))
    assert verify_prepares(c, code)


def test_greedy_is_deterministic(cc17):
    cfg = SynthConfig(seed=11)
    assert greedy_synth(cc17, cfg) == greedy_synth(cc17, cfg)


def test_greedy_from_rref_prepares_zero(cc17):
    c = greedy_synth(cc17, start_from_rref=True)
    assert verify_prepares(c, cc17)


def test_depth_optimization_keeps_validity(cc19):
    cfg = SynthConfig(optimize_depth=False)
    c = greedy_synth(cc19, cfg)
    assert verify_prepares(c, cc19)
