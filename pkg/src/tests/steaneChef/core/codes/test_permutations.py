import pytest

from steaneChef.core.circuit import PrepCircuit, verify_prepares
from steaneChef.core.codes import find_rotation_fix, is_automorphism, permute_circuit, registry_lookup
from steaneChef.core.codes.permutations import order
from steaneChef.core.codes.registry import CC_6_6_6_19_ROTATION
from steaneChef.utils.errors import ContractViolation

# A 120-degree rotation as published (1-based), with one repeated image.
PRINTED_ROTATION_1BASED = [10, 9, 19, 4, 12, 18, 5, 17, 11, 13, 2, 7, 1, 8, 18, 3, 14, 15, 16]


def test_rotation_is_automorphism():
    code = registry_lookup("cc_6_6_6_19")
    assert order(CC_6_6_6_19_ROTATION) == 3
    assert is_automorphism(code, CC_6_6_6_19_ROTATION)


def test_non_symmetry_is_rejected():
    code = registry_lookup("cc_6_6_6_19")
    swap = list(range(19))
    swap[0], swap[1] = 1, 0
    assert not is_automorphism(code, swap)


def test_is_automorphism_rejects_non_bijection():
    code = registry_lookup("steane")
    with pytest.raises(ContractViolation):
        is_automorphism(code, [0] * 7)


def test_printed_rotation_has_single_order_three_fix():
    """Test that exactly one single-entry correction gives an order-3 permutation."""
    printed = [v - 1 for v in PRINTED_ROTATION_1BASED]
    fixes = find_rotation_fix(printed, expected_order=3)
    assert len(fixes) == 1
    fixed = fixes[0]
    # position 15 (1-based) now maps to 6
    assert fixed[14] == 5
    assert sum(1 for i, v in enumerate(fixed) if i == v) == 1


def test_rotation_fix_recovers_corrupted_symmetry():
    code = registry_lookup("cc_6_6_6_19")
    corrupted = list(CC_6_6_6_19_ROTATION)
    corrupted[2] = corrupted[3]
    fixes = find_rotation_fix(corrupted, code=code)
    assert fixes == [tuple(CC_6_6_6_19_ROTATION)]


def test_permute_circuit_preserves_preparation():
    """Test that relabeling by a symmetry keeps a valid preparation valid."""
    code = registry_lookup("steane")
    circuit = PrepCircuit.from_plus_qubits(
        7, [0, 1, 3], [(0, 2), (0, 4), (0, 6), (1, 2), (1, 5), (1, 6), (3, 4), (3, 5), (3, 6)]
    )
    assert verify_prepares(circuit, code)
    # swapping qubits 1 and 3 together with 2 and 4 preserves the Hamming checks
    perm = [0, 3, 4, 1, 2, 5, 6]
    assert is_automorphism(code, perm)
    moved = permute_circuit(circuit, perm)
    assert moved.plus_qubits == [0, 1, 3]
    assert verify_prepares(moved, code)
