import json

import pytest

from steaneChef.core.circuit import PrepCircuit
from steaneChef.core.codes import X, Z
from steaneChef.core.ftcheck import is_strictly_ft, verify_quadruple
from steaneChef.utils.errors import VerificationError


def test_empty_circuit_is_strictly_ft(steane):
    c = PrepCircuit(7, ["Z"] * 7)
    assert is_strictly_ft(c, steane, X) is True
    assert is_strictly_ft(c, steane, Z) is True


def test_hamming_encoder_spreads_x_faults(steane, steane_prep):
    witness = is_strictly_ft(steane_prep, steane, X)
    assert not witness
    assert len(witness.errors) == 1
    assert witness.errors[0].weight == 2
    assert witness.min_weight == 2
    assert witness.to_dict()["basis"] == X


def test_z_faults_reduce_modulo_logical(steane, steane_prep):
    # every weight-2 Z error is a single Z times a weight-3 Hamming codeword
    assert is_strictly_ft(steane_prep, steane, Z) is True


def test_four_copies_pass_at_t_one(steane, steane_prep):
    report = verify_quadruple(steane_prep, steane_prep, steane_prep, steane_prep, steane)
    assert report
    assert report.t == 1
    assert [c.passed for c in report.conditions] == [True, True, True]
    assert report.witnesses == []


def test_report_serializes(steane, steane_prep):
    report = verify_quadruple(steane_prep, steane_prep, steane_prep, steane_prep, steane)
    data = json.loads(json.dumps(report.to_dict()))
    assert data["ok"] is True
    assert data["prepares"] == [True] * 4
    assert [c["condition"] for c in data["conditions"]] == [1, 2, 3]


def test_non_preparing_circuit_rejected(steane, steane_prep):
    broken = steane_prep.without_gate(0)
    with pytest.raises(VerificationError) as info:
        verify_quadruple(steane_prep, broken, steane_prep, steane_prep, steane)
    assert info.value.failing == [2]
    assert info.value.exit_code == 1
