import os
from pathlib import Path
from unittest.mock import patch

from steaneChef.config.config import Config, apply_config_file
from steaneChef.utils.const import (
    CONFIG_KEY_DATA_DIR,
    CONFIG_KEY_THREADS,
    DEFAULT_DISTINCT_CAP,
    DEFAULT_INJECT_BUDGET,
    DEFAULT_THREADS,
)


def test_config_initialization():
    config = Config()
    assert config.data_dir is not None
    assert config.threads == DEFAULT_THREADS
    assert config.distinct_cap == DEFAULT_DISTINCT_CAP
    assert config.inject_budget == DEFAULT_INJECT_BUDGET


def test_load_config_file(tmp_path):
    config_file = tmp_path / "steanechef.ini"
    config_file.write_text("[steanechef]\nlog_level = DEBUG\nweight_cap = 6\n")
    Config.load_from_file(str(config_file))
    config = Config()
    assert config.log_level == "DEBUG"
    assert config.weight_cap == 6


def test_other_sections_ignored(tmp_path):
    config_file = tmp_path / "other.ini"
    config_file.write_text("[elsewhere]\nthreads = 9\n")
    apply_config_file(value=str(config_file))
    assert Config().threads == DEFAULT_THREADS


def test_environment_variables():
    with patch.dict(os.environ, {"STEANECHEF_THREADS": "4", "STEANECHEF_DISTANCE_CAP": "oops"}):
        Config.initialize()
        assert Config().threads == 4
        # unparsable values fall back to the default
        assert Config().distance_cap == Config.DEFAULTS["distance_cap"]


def test_set_and_snapshot(tmp_path):
    Config().set(CONFIG_KEY_THREADS, 7)
    Config().set(CONFIG_KEY_DATA_DIR, str(tmp_path))
    snapshot = Config().snapshot()
    assert snapshot[CONFIG_KEY_THREADS] == 7
    assert snapshot[CONFIG_KEY_DATA_DIR] == str(Path(tmp_path).resolve())
    assert list(snapshot) == sorted(snapshot)
    assert Config.get("missing", "fallback") == "fallback"


def test_apply_config_file_passes_none_through():
    assert apply_config_file(None, None, None) is None
