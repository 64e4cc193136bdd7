import itertools

import numpy as np
import pytest

from steaneChef.core.codes import X, Z
from steaneChef.core.sim import build_lut
from steaneChef.core.sim import lut_decoder
from steaneChef.utils.errors import CapExceededError, ContractViolation


def test_steane_single_errors(steane):
    decoder = build_lut(steane, X)
    assert decoder.basis == X
    assert decoder.num_checks == 3
    assert len(decoder) == 8
    assert not decoder.heralded
    # X on qubit 3 only trips the check on {3, 4, 5, 6}
    assert decoder.decode(0b100) == 1 << 3
    assert decoder.decode(0) == 0
    assert all(bin(c).count("1") <= 1 for c in decoder.table.values())


def test_oversized_syndrome(steane):
    with pytest.raises(ContractViolation):
        build_lut(steane, Z).decode(1 << 3)


def test_decode_batch(steane):
    decoder = build_lut(steane, Z)
    corrections, heralded = decoder.decode_batch(np.array([0, 0b100]))
    assert corrections.shape == (7, 2)
    assert not corrections[:, 0].any()
    assert np.flatnonzero(corrections[:, 1]).tolist() == [3]
    assert not heralded.any()


def test_corrects_up_to_two_errors(cc17):
    decoder = build_lut(cc17, X)
    checks = cc17.h_z
    stabilizers = cc17.h_x.row_space
    for w in (1, 2):
        for support in itertools.combinations(range(cc17.n), w):
            error = sum(1 << q for q in support)
            correction = decoder.decode(checks.syndrome_int(error))
            assert correction is not None
            assert stabilizers.contains(error ^ correction)


def test_distance_cap(steane, monkeypatch):
    monkeypatch.setattr(lut_decoder, "MAX_LUT_DISTANCE", 2)
    with pytest.raises(CapExceededError):
        build_lut(steane, X)
