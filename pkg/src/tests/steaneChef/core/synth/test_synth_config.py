import json

import pytest

from steaneChef.core.synth import SynthConfig
from steaneChef.utils.errors import ConfigParseError


def test_defaults_round_trip_through_dict():
    cfg = SynthConfig()
    assert SynthConfig.from_dict(cfg.to_dict()) == cfg


def test_unknown_key_rejected():
    with pytest.raises(ConfigParseError) as info:
        SynthConfig.from_dict({"seed": 1, "max_backtrack": 3})
    assert "max_backtrack" in str(info.value)


@pytest.mark.parametrize(
    "data",
    [
        {"seed": "7"},
        {"forbid_ref_last_layer": 1},
        {"perturbation_prob": True},
        {"perturbation_prob": 1.5},
        {"max_restarts": -1},
    ],
)
def test_bad_values_rejected(data):
    with pytest.raises(ConfigParseError):
        SynthConfig.from_dict(data)


def test_yaml_file(tmp_path):
    path = tmp_path / "synth.yaml"
    path.write_text("seed: 42\nmax_restarts: 3\nperturbation_prob: 0\nstart_from_rref: false\n")
    cfg = SynthConfig.from_file(path)
    assert cfg.seed == 42
    assert cfg.max_restarts == 3
    assert cfg.perturbation_prob == 0.0
    assert cfg.start_from_rref is False


def test_json_file(tmp_path):
    path = tmp_path / "synth.json"
    path.write_text(json.dumps({"optimize_depth": False}))
    assert SynthConfig.from_file(path).optimize_depth is False


def test_malformed_yaml_reports_line(tmp_path):
    path = tmp_path / "synth.yml"
    path.write_text("seed: 1\nmax_restarts: [1, 2\n")
    with pytest.raises(ConfigParseError) as info:
        SynthConfig.from_file(path)
    assert info.value.line_number is not None


def test_non_mapping_rejected(tmp_path):
    path = tmp_path / "synth.json"
    path.write_text("[1, 2]")
    with pytest.raises(ConfigParseError):
        SynthConfig.from_file(path)


def test_replace_validates():
    cfg = SynthConfig().replace(seed=9)
    assert cfg.seed == 9
    with pytest.raises(ConfigParseError):
        cfg.replace(perturbation_prob=-0.1)
