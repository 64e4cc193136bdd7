import random

import pytest

from steaneChef.config.config import Config
from steaneChef.core.codes import X, Z
from steaneChef.core.faults import FaultSet, PauliError, equivalent, weight_leq
from steaneChef.core.ftcheck import incremental_distinct, is_t_distinct
from steaneChef.utils.const import CONFIG_KEY_DISTINCT_CAP
from steaneChef.utils.errors import CapExceededError, ContractViolation


def _bits(*qubits):
    out = 0
    for q in qubits:
        out |= 1 << q
    return out


def _random_set(rng, basis, n, size, max_weight=3):
    fs = FaultSet(basis, n, include_singles=False)
    while len(fs) < size:
        support = rng.sample(range(n), rng.randint(1, max_weight))
        fs.add(_bits(*support))
    return fs


def test_singles_are_distinct(steane):
    singles = FaultSet.singles(X, 7)
    assert is_t_distinct(singles, singles, 2, steane) is True
    assert is_t_distinct(singles, singles, 3, steane) is True


def test_logical_error_is_not_distinct_to_itself(steane):
    e = FaultSet(X, 7, [_bits(0, 1, 2)], include_singles=False)
    witness = is_t_distinct(e, e, 2, steane)
    assert not witness
    assert [p.support.support() for p in witness.subset_1] == [[0, 1, 2]]
    assert [p.support.support() for p in witness.subset_2] == [[0, 1, 2]]
    assert witness.combined_weight_bound == 2
    assert witness.min_weight == 3


def test_t_one_is_always_distinct(steane):
    e = FaultSet(X, 7, [_bits(0, 1, 2)], include_singles=False)
    assert is_t_distinct(e, e, 1, steane) is True


def test_distinct_when_products_differ(cc17):
    e1 = FaultSet(X, 17, [_bits(4, 5, 6, 10)], include_singles=False)
    e2 = FaultSet(X, 17, [_bits(4, 5, 6), _bits(9, 10, 15)], include_singles=False)
    assert is_t_distinct(e1, e2, 2, cc17) is True


def test_basis_mismatch(steane):
    with pytest.raises(ContractViolation):
        is_t_distinct(FaultSet.singles(X, 7), FaultSet.singles(Z, 7), 2, steane)


def test_cap_enforced(steane):
    Config().set(CONFIG_KEY_DISTINCT_CAP, 2)
    with pytest.raises(CapExceededError):
        is_t_distinct(FaultSet.singles(X, 7), FaultSet.singles(X, 7), 3, steane)


@pytest.mark.parametrize("basis", [X, Z])
def test_symmetric_and_monotone(cc17, basis):
    rng = random.Random(21)
    for _ in range(40):
        a = _random_set(rng, basis, 17, 12, max_weight=4)
        b = _random_set(rng, basis, 17, 12, max_weight=4)
        for t in (2, 3):
            assert bool(is_t_distinct(a, b, t, cc17)) == bool(is_t_distinct(b, a, t, cc17))
        if is_t_distinct(a, b, 3, cc17):
            assert is_t_distinct(a, b, 2, cc17)


def test_witnesses_revalidate(steane):
    """Test that every witness has equivalent products that are too heavy."""
    rng = random.Random(5)
    found = 0
    for _ in range(60):
        a = _random_set(rng, X, 7, 5)
        b = _random_set(rng, X, 7, 5)
        witness = is_t_distinct(a, b, 3, steane)
        if witness is True:
            continue
        found += 1
        left = witness.product
        right = witness.subset_2[0]
        for e in witness.subset_2[1:]:
            right = right * e
        bound = witness.combined_weight_bound
        assert len(witness.subset_1) + len(witness.subset_2) == bound <= 3
        assert equivalent(left, right, steane)
        assert not weight_leq(left, bound, steane)
    assert found > 0


@pytest.mark.parametrize("t, n_code", [(2, "cc17"), (3, "steane")])
def test_incremental_matches_full_check(request, t, n_code):
    code = request.getfixturevalue(n_code)
    n = code.n
    rng = random.Random(100 + t)
    for basis in (X, Z):
        ref = _random_set(rng, basis, n, 10 if t == 3 else 25)
        existing = FaultSet(basis, n, include_singles=False)
        for _ in range(120):
            support = rng.sample(range(n), rng.randint(1, 4))
            new = PauliError.from_support(basis, n, support)
            grown = existing.copy()
            grown.add(new.bits)
            full = bool(is_t_distinct(grown, ref, t, code))
            assert incremental_distinct(existing, new, ref, t, code) == full
            if full:
                existing = grown


def test_incremental_known_member(steane):
    existing = FaultSet(X, 7, [_bits(0, 1, 2)], include_singles=False)
    ref = FaultSet(X, 7, [_bits(0, 1, 2)], include_singles=False)
    assert incremental_distinct(existing, PauliError.from_support(X, 7, [0, 1, 2]), ref, 2, steane)
    fresh = FaultSet(X, 7, include_singles=False)
    assert not incremental_distinct(fresh, PauliError.from_support(X, 7, [0, 1, 2]), ref, 2, steane)
