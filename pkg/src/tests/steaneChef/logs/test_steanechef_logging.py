import logging
from unittest.mock import patch

from steaneChef.logs.steanechef_logging import get_module_logger, log, setup_file_logging, verbose_callback


def test_setup_file_logging(tmp_path):
    setup_file_logging(str(tmp_path / "logs"))
    logger = logging.getLogger("steanechef")
    handlers = [h for h in logger.handlers if isinstance(h, logging.FileHandler)]
    try:
        assert (tmp_path / "logs" / "steanechef.log").exists()
        assert handlers
    finally:
        for handler in handlers:
            logger.removeHandler(handler)
            handler.close()


def test_module_logger_name():
    assert get_module_logger("synth").name == "steanechef.synth"


def test_log_levels():
    with patch("logging.Logger.debug") as mock_debug, patch("logging.Logger.warning") as mock_warning:
        log.debug("placed CX(%d,%d)", 0, 1)
        log.warning("test warning")
        mock_debug.assert_called_once_with("placed CX(%d,%d)", 0, 1)
        mock_warning.assert_called_once_with("test warning")


def test_verbose_callback_enables_debug():
    with patch("steaneChef.logs.steanechef_logging.enable_debug_logging") as enable:
        assert verbose_callback(None, None, True) is True
        enable.assert_called_once_with()
        assert verbose_callback(None, None, False) is False
        enable.assert_called_once_with()
