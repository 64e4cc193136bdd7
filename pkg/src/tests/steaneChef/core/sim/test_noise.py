import dataclasses

import pytest

from steaneChef.core.sim import NoiseModel
from steaneChef.utils.errors import ContractViolation


def test_rates_scale_with_p():
    noise = NoiseModel(0.03)
    assert noise.two_qubit_depol == pytest.approx(0.03)
    assert noise.prep_meas_flip == pytest.approx(0.02)
    assert noise.idle_depol == pytest.approx(3e-4)
    assert noise.data_depol == pytest.approx(0.03)


def test_noiseless():
    assert NoiseModel.noiseless().is_noiseless
    assert not NoiseModel.scaled(1e-3).is_noiseless


@pytest.mark.parametrize("p", [-0.1, 1.5])
def test_out_of_range(p):
    with pytest.raises(ContractViolation):
        NoiseModel(p)


def test_frozen():
    with pytest.raises(dataclasses.FrozenInstanceError):
        NoiseModel(0.1).p = 0.2


def test_to_dict():
    data = NoiseModel(0.003).to_dict()
    assert data["p"] == 0.003
    assert data["idle_depol"] == pytest.approx(3e-5)
