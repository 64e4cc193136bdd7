"""
Configuration management for steaneChef.

This module provides the application-level settings (data directory, logging,
worker counts and search caps). Synthesis parameters live in
:class:`steaneChef.core.synth.synth_config.SynthConfig`.
"""

import configparser
import os
import pathlib
from typing import Any, Dict, Optional

from oarc_utils.decorators import singleton

from steaneChef.logs.steanechef_logging import log
from steaneChef.utils.const import (
    CONFIG_KEY_DATA_DIR,
    CONFIG_KEY_DISTANCE_CAP,
    CONFIG_KEY_DISTINCT_CAP,
    CONFIG_KEY_INJECT_BUDGET,
    CONFIG_KEY_LOG_LEVEL,
    CONFIG_KEY_SHOT_CHUNK,
    CONFIG_KEY_THREADS,
    CONFIG_KEY_WEIGHT_CAP,
    CONFIG_SECTION,
    DEFAULT_DISTANCE_CAP,
    DEFAULT_DISTINCT_CAP,
    DEFAULT_INJECT_BUDGET,
    DEFAULT_LOG_LEVEL,
    DEFAULT_SHOT_CHUNK,
    DEFAULT_THREADS,
    DEFAULT_WEIGHT_CAP,
    ENV_DATA_DIR,
    ENV_DISTANCE_CAP,
    ENV_DISTINCT_CAP,
    ENV_INJECT_BUDGET,
    ENV_LOG_LEVEL,
    ENV_SHOT_CHUNK,
    ENV_THREADS,
    ENV_WEIGHT_CAP,
)
from steaneChef.utils.paths import Paths


@singleton
class Config:
    """
    Singleton configuration manager for steaneChef.

    This class centralizes all configuration logic, providing:
      - Default values for all supported settings
      - Automatic overrides from environment variables
      - Optional overrides from configuration files (INI format)
      - Runtime access and mutation of configuration values

    Examples:
      Get configuration value:
        $ config = Config()
        $ cap = config.distance_cap

      Set configuration value:
        $ Config().set(CONFIG_KEY_THREADS, 4)
    """

    DEFAULTS = {
        CONFIG_KEY_DATA_DIR: str(Paths().get_default_data_dir()),
        CONFIG_KEY_LOG_LEVEL: DEFAULT_LOG_LEVEL,
        CONFIG_KEY_THREADS: DEFAULT_THREADS,
        CONFIG_KEY_DISTANCE_CAP: DEFAULT_DISTANCE_CAP,
        CONFIG_KEY_WEIGHT_CAP: DEFAULT_WEIGHT_CAP,
        CONFIG_KEY_DISTINCT_CAP: DEFAULT_DISTINCT_CAP,
        CONFIG_KEY_INJECT_BUDGET: DEFAULT_INJECT_BUDGET,
        CONFIG_KEY_SHOT_CHUNK: DEFAULT_SHOT_CHUNK,
    }

    # Environment variable mappings (ENV_VAR_NAME: config_key)
    ENV_VARS = {
        ENV_DATA_DIR: CONFIG_KEY_DATA_DIR,
        ENV_LOG_LEVEL: CONFIG_KEY_LOG_LEVEL,
        ENV_THREADS: CONFIG_KEY_THREADS,
        ENV_DISTANCE_CAP: CONFIG_KEY_DISTANCE_CAP,
        ENV_WEIGHT_CAP: CONFIG_KEY_WEIGHT_CAP,
        ENV_DISTINCT_CAP: CONFIG_KEY_DISTINCT_CAP,
        ENV_INJECT_BUDGET: CONFIG_KEY_INJECT_BUDGET,
        ENV_SHOT_CHUNK: CONFIG_KEY_SHOT_CHUNK,
    }

    _config: Dict[str, Any] = {}

    def __init__(self):
        """Initialize configuration if not already done."""
        if not hasattr(self, "_init_done"):
            self.initialize()
            self._init_done = True

    @classmethod
    def initialize(cls) -> None:
        """
        Initialize configuration with defaults, environment overrides, and config file.

        This method sets up the configuration in the following order:
            1. Loads default values.
            2. Applies environment variable overrides if present.
            3. Loads and applies configuration from a config file if found.
            4. Ensures the data directory is a resolved Path object.
        """
        cls._config = {}
        cls._config.update(cls.DEFAULTS)

        for env_var, config_key in cls.ENV_VARS.items():
            if env_var in os.environ:
                cls._config[config_key] = cls._parse_value(os.environ[env_var], cls.DEFAULTS[config_key])

        cls._load_from_config_file()
        cls._config[CONFIG_KEY_DATA_DIR] = pathlib.Path(cls._config[CONFIG_KEY_DATA_DIR]).resolve()
        log.debug("Initialized Config with: %s", cls._config)

    @classmethod
    def _parse_value(cls, value: str, default: Any) -> Any:
        """
        Parse a string value into the appropriate type based on the default.

        Args:
            value: The string value to parse
            default: The default value to determine the type

        Returns:
            The parsed value with the appropriate type
        """
        if isinstance(default, bool):
            return value.lower() in ("yes", "true", "t", "1", "y")
        elif isinstance(default, int):
            try:
                return int(value)
            except (ValueError, TypeError):
                log.warning("Could not parse '%s' as int, using default %s", value, default)
                return default
        elif isinstance(default, float):
            try:
                return float(value)
            except (ValueError, TypeError):
                log.warning("Could not parse '%s' as float, using default %s", value, default)
                return default
        return value

    @classmethod
    def _load_from_config_file(cls, config_file: Optional[str] = None) -> None:
        """
        Load configuration settings from an INI file.

        If a specific config_file path is provided and exists, load configuration from that
        file. Otherwise, use the first file found in the default locations.

        Args:
            config_file: Optional path to a config file.
        """
        parser = configparser.ConfigParser()
        path = pathlib.Path(config_file) if config_file else Paths().find_config_file()
        if path is None or not path.exists():
            return
        parser.read(path)
        if CONFIG_SECTION in parser:
            log.debug("Loading config from: %s", path)
            cls._update_from_config_section(parser[CONFIG_SECTION])

    @classmethod
    def _update_from_config_section(cls, section) -> None:
        """
        Update configuration from a configparser section.

        Args:
            section (configparser.SectionProxy or dict): key-value pairs to apply.
        """
        for key in cls.DEFAULTS.keys():
            if key in section:
                cls._config[key] = cls._parse_value(section[key], cls.DEFAULTS[key])

        if isinstance(cls._config.get(CONFIG_KEY_DATA_DIR), str):
            cls._config[CONFIG_KEY_DATA_DIR] = pathlib.Path(cls._config[CONFIG_KEY_DATA_DIR]).resolve()

    @classmethod
    def load_from_file(cls, config_file: str) -> None:
        """
        Load configuration from a specific file.

        Args:
            config_file: Path to the config file to load.
        """
        log.debug("Explicitly loading config from: %s", config_file)
        cls._load_from_config_file(config_file)

    @property
    def data_dir(self) -> pathlib.Path:
        """Get the configured data directory."""
        return self._config[CONFIG_KEY_DATA_DIR]

    @property
    def log_level(self) -> str:
        """Get the configured log level."""
        return self._config[CONFIG_KEY_LOG_LEVEL]

    @property
    def threads(self) -> int:
        """Default worker count for shot loops."""
        return self._config[CONFIG_KEY_THREADS]

    @property
    def distance_cap(self) -> int:
        """Largest n for which distances are computed by enumeration."""
        return self._config[CONFIG_KEY_DISTANCE_CAP]

    @property
    def weight_cap(self) -> int:
        """Largest t accepted by weight_leq."""
        return self._config[CONFIG_KEY_WEIGHT_CAP]

    @property
    def distinct_cap(self) -> int:
        """Largest t accepted by the distinctness checks."""
        return self._config[CONFIG_KEY_DISTINCT_CAP]

    @property
    def inject_budget(self) -> int:
        """Maximum number of fault combinations the injector enumerates."""
        return self._config[CONFIG_KEY_INJECT_BUDGET]

    @property
    def shot_chunk(self) -> int:
        """Shots per vectorised simulator batch."""
        return self._config[CONFIG_KEY_SHOT_CHUNK]

    @classmethod
    def get(cls, key: str, default: Any = None) -> Any:
        """
        Get a configuration value by key.

        Args:
            key: The configuration key
            default: Default value if key not found

        Returns:
            The configuration value, or default if not found
        """
        return cls._config.get(key, default)

    @classmethod
    def set(cls, key: str, value: Any) -> None:
        """
        Set a configuration value.

        Args:
            key: The configuration key
            value: The value to set
        """
        cls._config[key] = value
        log.debug("Set config %s=%s", key, value)
        if key == CONFIG_KEY_DATA_DIR:
            cls._config[CONFIG_KEY_DATA_DIR] = pathlib.Path(value).resolve()

    @classmethod
    def snapshot(cls) -> Dict[str, Any]:
        """JSON-friendly copy of the current settings."""
        return {k: (str(v) if isinstance(v, pathlib.Path) else v) for k, v in sorted(cls._config.items())}


def apply_config_file(ctx=None, param=None, value=None) -> Any:
    """
    Load an INI configuration file into :class:`Config`.

    Usable directly and as a Click callback.

    Args:
        ctx: The click context (optional, for callback usage)
        param: The parameter being processed (optional, for callback usage)
        value: Path to the INI file, or None

    Returns:
        The parameter value
    """
    if value is None:
        return value
    Config().load_from_file(value)
    log.debug("Applied configuration from file: %s", value)
    return value


def load_from_file(config_file: str) -> None:
    """Load an INI configuration file into the shared :class:`Config`."""
    Config().load_from_file(config_file)
