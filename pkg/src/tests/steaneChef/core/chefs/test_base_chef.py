import pytest

from steaneChef.config.config import Config
from steaneChef.core.chefs import BaseChef


def test_defaults_to_configured_data_dir():
    chef = BaseChef("plain")
    assert chef.data_dir == Config().data_dir
    assert chef.logger.name == "steanechef.chef.plain"


def test_ensure_data_dir(tmp_path):
    chef = BaseChef("plain", data_dir=tmp_path / "nested" / "data")
    path = chef.ensure_data_dir()
    assert path.is_dir()


def test_callbacks_receive_events():
    chef = BaseChef("plain")
    seen = []
    chef.register_callback("stage", seen.append)
    chef.register_callback("stage", lambda data: seen.append(data.upper()))
    chef.emit_event("stage", "go")
    chef.emit_event("other", "ignored")
    assert seen == ["go", "GO"]


def test_failing_callback_does_not_stop_others():
    chef = BaseChef("plain")
    seen = []

    def broken(_):
        raise RuntimeError("boom")

    chef.register_callback("stage", broken)
    chef.register_callback("stage", seen.append)
    chef.emit_event("stage", 1)
    assert seen == [1]


def test_process_must_be_overridden():
    with pytest.raises(NotImplementedError):
        BaseChef("plain").process("steane")
