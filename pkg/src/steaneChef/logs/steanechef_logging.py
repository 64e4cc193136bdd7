"""
Centralized logging configuration for steaneChef using OARC-Log.
Other modules should import from this module instead of directly from oarc_log.

Example usage:
    from steaneChef.logs.steanechef_logging import log, setup_file_logging

    # Set up file logging if needed
    setup_file_logging("./logs")

    # Debug - per-step synthesis decisions, cache builds
    log.debug("placed CX(%d,%d) at depth %d", control, target, depth)

    # Info - stage progress
    log.info("stage %s finished with %d CNOTs", stage, count)

    # Warning - recoverable surprises
    log.warning("distance of %s not computed: n=%d above cap", name, n)

    # Error - a command could not finish
    log.error("synthesis failed", exc_info=True)

Notes on Log Levels:
-------------------
debug:    synthesis steps, backtracks, table builds
info:     stage and simulation-point progress
warning:  deduplicated rows, skipped distances, heralded syndromes
error:    failures in specific operations

Format messages using parameters, not f-strings.
"""

import logging
from pathlib import Path

from oarc_log import enable_debug_logging, log


def setup_file_logging(log_dir: str, filename: str = "steanechef.log") -> None:
    """Configure logging to write to a file in the specified directory.

    Args:
        log_dir (str): Directory to store log files
        filename (str): Name of the log file
    """
    try:
        Path(log_dir).mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(Path(log_dir) / filename, encoding="utf-8")
        file_handler.setFormatter(
            logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        )
        logger = logging.getLogger("steanechef")
        logger.addHandler(file_handler)
        logger.setLevel(logging.INFO)
    except OSError as e:
        log.warning("Could not set up file logging: %s", e)


def get_module_logger(module_name: str) -> logging.Logger:
    """Get a logger for a specific module."""
    return logging.getLogger(f"steanechef.{module_name}")


def set_debug(enabled: bool = True) -> None:
    """Enable or disable debug logging."""
    if enabled:
        enable_debug_logging()
    else:
        log.setLevel(logging.INFO)


def verbose_callback(ctx, param, value):
    """Click callback for ``--verbose``."""
    if value:
        set_debug(True)
    return value


__all__ = [
    "log",
    "enable_debug_logging",
    "setup_file_logging",
    "get_module_logger",
    "set_debug",
    "verbose_callback",
]
