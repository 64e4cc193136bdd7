import random

import pytest

from steaneChef.core.circuit import PrepCircuit
from steaneChef.core.codes import X, Z
from steaneChef.core.faults import (
    FaultSet,
    PauliError,
    equivalent,
    fault_set,
    min_weight_upto,
    propagate,
    propagate_bits,
    state_stabilizers,
    weight_leq,
)
from steaneChef.utils.errors import CapExceededError, ContractViolation


def _zero_init(n):
    return ["Z"] * n


def _brute_min_weight(bits, generators):
    best = bits.bit_count()
    for mask in range(1 << len(generators)):
        v = bits
        for i, g in enumerate(generators):
            if (mask >> i) & 1:
                v ^= g
        best = min(best, v.bit_count())
    return best


def test_propagate_examples():
    c = PrepCircuit(3, _zero_init(3), [(0, 1)])
    assert propagate(c, X, 0, 0).support.support() == [0, 1]
    assert propagate(c, Z, 1, 0).support.support() == [0, 1]
    assert propagate(c, X, 1, 0).support.support() == [1]
    chain = PrepCircuit(3, _zero_init(3), [(0, 1), (1, 2)])
    assert propagate(chain, X, 0, 0).support.support() == [0, 1, 2]
    # seeded after the first gate only the second one acts
    assert propagate(chain, X, 0, 1).support.support() == [0]


def test_propagate_position_checked():
    c = PrepCircuit(2, _zero_init(2), [(0, 1)])
    with pytest.raises(ContractViolation):
        propagate(c, X, 0, 2)
    with pytest.raises(ContractViolation):
        propagate(c, X, 5, 0)


def test_propagate_is_linear():
    """Test that a two-qubit seed propagates to the XOR of its parts."""
    rng = random.Random(11)
    for _ in range(30):
        n = 6
        gates = [tuple(rng.sample(range(n), 2)) for _ in range(12)]
        c = PrepCircuit(n, _zero_init(n), gates)
        j = rng.randint(0, len(gates))
        a, b = rng.sample(range(n), 2)
        for basis in (X, Z):
            pair = propagate_bits(gates[j:], basis, (1 << a) | (1 << b))
            assert pair == propagate(c, basis, a, j).bits ^ propagate(c, basis, b, j).bits


def test_fault_set_of_empty_circuit():
    fs = fault_set(PrepCircuit(4, _zero_init(4)), X)
    assert sorted(fs) == [1, 2, 4, 8]


def test_fault_set_single_gate():
    fs = fault_set(PrepCircuit(3, _zero_init(3), [(0, 1)]), X)
    assert set(fs) == {0b001, 0b010, 0b100, 0b011}
    assert fs.provenance[0b011] == (0, 0)
    assert fs.provenance[0b001] is None


def test_fault_set_matches_direct_propagation():
    rng = random.Random(3)
    for _ in range(10):
        n = 7
        gates = [tuple(rng.sample(range(n), 2)) for _ in range(10)]
        c = PrepCircuit(n, _zero_init(n), gates)
        for basis in (X, Z):
            expected = {propagate(c, basis, q, j).bits for q in range(n) for j in range(len(gates) + 1)}
            assert set(fault_set(c, basis)) == expected


def test_fault_set_monotone_in_suffix():
    rng = random.Random(4)
    n = 6
    gates = [tuple(rng.sample(range(n), 2)) for _ in range(14)]
    full = PrepCircuit(n, _zero_init(n), gates)
    for j in range(len(gates) + 1):
        suffix = PrepCircuit(n, _zero_init(n), gates[j:])
        for basis in (X, Z):
            assert set(fault_set(suffix, basis)) <= set(fault_set(full, basis))


def test_steane_prep_has_weight_two_faults(steane_prep):
    fs = fault_set(steane_prep, X)
    assert max(PauliError.from_bits(X, 7, b).weight for b in fs) >= 2


def test_fault_set_union_keeps_order():
    a = FaultSet(X, 3, [0b011], include_singles=False)
    b = FaultSet(X, 3, [0b110, 0b011], include_singles=False)
    assert a.union(b).supports() == [0b011, 0b110]
    assert len(FaultSet.singles(Z, 5)) == 5


def test_weight_leq_examples(steane):
    stab = PauliError.from_support(X, 7, [0, 2, 4, 6])
    assert weight_leq(stab, 0, steane)
    assert weight_leq(PauliError.from_support(X, 7, [0, 2, 4]), 1, steane)
    assert not weight_leq(PauliError.from_support(X, 7, [0, 1, 2]), 2, steane)
    assert weight_leq(PauliError.from_support(X, 7, [0, 1, 2]), 3, steane)


def test_logical_z_is_trivial_on_zero_state(steane):
    """Test that Z errors are reduced modulo the logical Z of |0>_L as well."""
    logical_z = steane.logicals_z.row_ints()[0]
    assert weight_leq(PauliError.from_bits(Z, 7, logical_z), 0, steane)
    assert not weight_leq(PauliError.from_bits(X, 7, steane.logicals_x.row_ints()[0]), 2, steane)


@pytest.mark.parametrize("basis", [X, Z])
def test_weight_leq_matches_stabilizer_enumeration(cc17, basis):
    generators = state_stabilizers(cc17, basis).basis()
    assert len(generators) <= 12
    rng = random.Random(17)
    for _ in range(200):
        bits = rng.getrandbits(17)
        brute = _brute_min_weight(bits, generators)
        e = PauliError.from_bits(basis, 17, bits)
        for t in range(4):
            assert weight_leq(e, t, cc17) == (brute <= t)
        assert min_weight_upto(e, 3, cc17) == (brute if brute <= 3 else None)


def test_weight_cap(steane):
    with pytest.raises(CapExceededError):
        weight_leq(PauliError.from_support(X, 7, [0]), 5, steane)


def test_equivalent_examples(steane):
    e = PauliError.from_support(X, 7, [0, 2, 4])
    assert equivalent(e, e, steane)
    assert equivalent(e, PauliError.from_support(X, 7, [6]), steane)
    assert not equivalent(PauliError.from_support(X, 7, [0]), PauliError.from_support(X, 7, [1]), steane)
    with pytest.raises(ContractViolation):
        equivalent(e, PauliError.from_support(Z, 7, [0]), steane)


def test_equivalence_relation_on_samples(steane):
    rng = random.Random(8)
    errors = [PauliError.from_bits(X, 7, rng.getrandbits(7)) for _ in range(30)]
    for a in errors:
        for b in errors:
            assert equivalent(a, b, steane) == equivalent(b, a, steane)
            if equivalent(a, b, steane):
                for c in errors:
                    if equivalent(b, c, steane):
                        assert equivalent(a, c, steane)
