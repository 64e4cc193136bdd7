import pytest

from steaneChef.core.codes import X, Z, available_codes, registry_lookup, rotated_surface_code
from steaneChef.core.codes.registry import (
    CC_4_8_8_17_PLAQUETTES,
    CC_6_6_6_19_PLAQUETTES,
    NOT_SHIPPED,
    rotated_surface_supports,
)
from steaneChef.core.gf2 import BitMatrix, mat_mul_t
from steaneChef.utils.errors import ContractViolation, UnknownCodeError

EXPECTED = {
    "steane": (7, 1, 3),
    "cc_4_8_8_17": (17, 1, 5),
    "cc_6_6_6_19": (19, 1, 5),
    "surface_9": (9, 1, 3),
    "surface_25": (25, 1, 5),
}


def test_registry_names():
    assert available_codes() == list(EXPECTED)
    assert not set(NOT_SHIPPED) & set(available_codes())


@pytest.mark.parametrize("name", list(EXPECTED))
def test_registry_code_parameters(name):
    """Test that every registered code validates with its registered n and k."""
    code = registry_lookup(name)
    n, k, d = EXPECTED[name]
    assert (code.n, code.k, code.d) == (n, k, d)
    assert mat_mul_t(code.logicals_x, code.logicals_z) == BitMatrix.identity(k)


@pytest.mark.parametrize("name", ["steane", "cc_4_8_8_17", "cc_6_6_6_19", "surface_9"])
def test_registry_distance_matches(name):
    """Test that the enumerated distance equals the registered one."""
    code = registry_lookup(name)
    assert code.distance(X) == EXPECTED[name][2]
    assert code.distance(Z) == EXPECTED[name][2]


@pytest.mark.slow
def test_surface_25_distance():
    code = registry_lookup("surface_25")
    assert code.distance(X) == 5
    assert code.distance(Z) == 5


def test_unknown_code_lists_names():
    with pytest.raises(UnknownCodeError) as info:
        registry_lookup("nonexistent")
    assert "steane" in str(info.value)
    assert info.value.available == available_codes()


def test_registry_lookup_is_cached():
    assert registry_lookup("steane") is registry_lookup("steane")


def test_color_code_plaquette_weights():
    assert sorted(len(p) for p in CC_4_8_8_17_PLAQUETTES) == [4] * 7 + [8]
    assert sorted(len(p) for p in CC_6_6_6_19_PLAQUETTES) == [4] * 6 + [6] * 3
    code = registry_lookup("cc_4_8_8_17")
    assert sorted(code.stabilizer_weights(X)) == [4] * 7 + [8]


def test_color_code_weight_five_logical():
    code = registry_lookup("cc_6_6_6_19")
    bits = sum(1 << q for q in range(5))
    assert code.h_z.syndrome_int(bits) == 0
    assert not code.x_space.contains(bits)


def test_rotated_surface_counts():
    x_faces, z_faces = rotated_surface_supports(3)
    assert len(x_faces) == len(z_faces) == 4
    assert sorted(len(f) for f in x_faces) == [2, 2, 4, 4]
    assert rotated_surface_code(3).k == 1


def test_rotated_surface_rejects_even_distance():
    with pytest.raises(ContractViolation):
        rotated_surface_supports(4)


def test_unshipped_code_names_its_reason():
    with pytest.raises(UnknownCodeError) as info:
        registry_lookup("cc_4_8_8_31")
    assert info.value.reason == NOT_SHIPPED["cc_4_8_8_31"]
    assert "not shipped" in str(info.value)
