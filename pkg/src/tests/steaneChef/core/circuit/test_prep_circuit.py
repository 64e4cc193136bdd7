import random

import pytest

from steaneChef.core.circuit import PrepCircuit, depth, layers, verify_prepares
from steaneChef.core.circuit.prep_circuit import stabilizer_matrices
from steaneChef.core.codes import registry_lookup, validate
from steaneChef.core.gf2 import BitMatrix
from steaneChef.utils.errors import ContractViolation

STEANE_GATES = [(0, 2), (0, 4), (0, 6), (1, 2), (1, 5), (1, 6), (3, 4), (3, 5), (3, 6)]


@pytest.fixture
def steane_circuit():
    return PrepCircuit.from_plus_qubits(7, [0, 1, 3], STEANE_GATES)


def _per_qubit_sequences(gates, n):
    seqs = [[] for _ in range(n)]
    for g in gates:
        for q in g:
            seqs[q].append(g)
    return seqs


def test_depth_examples():
    init = ["Z"] * 4
    assert depth(PrepCircuit(4, init, [(0, 1), (2, 3)])) == 1
    assert depth(PrepCircuit(4, init, [(0, 1), (1, 2)])) == 2
    assert depth(PrepCircuit(4, init)) == 0
    assert PrepCircuit(4, init).full_depth() == 1


def test_depth_of_steane_circuit(steane_circuit):
    assert steane_circuit.depth() == 5
    assert steane_circuit.cnot_count == 9
    assert steane_circuit.depth() <= steane_circuit.cnot_count


def test_layers_never_share_a_qubit(steane_circuit):
    for layer in layers(steane_circuit):
        qubits = [q for gate in layer for q in gate]
        assert len(qubits) == len(set(qubits))


def test_layering_preserves_per_qubit_order():
    """Test that flattening the layers keeps every qubit's gate subsequence."""
    rng = random.Random(5)
    for _ in range(20):
        gates = [tuple(rng.sample(range(6), 2)) for _ in range(15)]
        c = PrepCircuit(6, ["Z"] * 6, gates)
        flat = [g for layer in c.layers() for g in layer]
        assert _per_qubit_sequences(flat, 6) == _per_qubit_sequences(gates, 6)


def test_verify_prepares_steane(steane_circuit):
    code = registry_lookup("steane")
    assert verify_prepares(steane_circuit, code)


def test_verify_detects_missing_gate(steane_circuit):
    code = registry_lookup("steane")
    for index in range(steane_circuit.cnot_count):
        assert not verify_prepares(steane_circuit.without_gate(index), code)


def test_verify_invariant_under_layer_reordering(steane_circuit):
    code = registry_lookup("steane")
    reordered = [g for layer in steane_circuit.layers() for g in reversed(layer)]
    assert verify_prepares(PrepCircuit(7, steane_circuit.init, reordered), code)


def test_verify_trivial_code():
    code = validate(BitMatrix.zeros(0, 1), BitMatrix.zeros(0, 1))
    assert verify_prepares(PrepCircuit(1, ["Z"]), code)
    assert not verify_prepares(PrepCircuit(1, ["P"]), code)


def test_verify_qubit_mismatch():
    with pytest.raises(ContractViolation):
        verify_prepares(PrepCircuit(3, ["Z"] * 3), registry_lookup("steane"))


def test_stabilizer_matrices(steane_circuit):
    x_mat, z_mat = stabilizer_matrices(steane_circuit)
    assert x_mat == BitMatrix.from_strings(["1010101", "0110011", "0001111"])
    assert z_mat.rows == 4


def test_control_equals_target_rejected():
    with pytest.raises(ContractViolation):
        PrepCircuit(2, ["Z", "Z"], [(1, 1)])


def test_editing_helpers(steane_circuit):
    """Test removing a gate and inserting another before a named gate."""
    edited = steane_circuit.without_gate(steane_circuit.index_of((1, 5)))
    edited = edited.with_gate(edited.index_of((3, 5)), (1, 5))
    assert edited.cnot_count == 9
    assert edited.gates.index((1, 5)) == edited.gates.index((3, 5)) - 1
    assert verify_prepares(edited, registry_lookup("steane"))


def test_from_code_product_state_checks_counts():
    code = registry_lookup("steane")
    with pytest.raises(ContractViolation):
        PrepCircuit.from_code_product_state(code, [0, 1])
    assert PrepCircuit.from_code_product_state(code, [0, 1, 3]).plus_qubits == [0, 1, 3]
