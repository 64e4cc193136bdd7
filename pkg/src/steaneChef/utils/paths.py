"""
Path utility functions for steaneChef.

This module provides standardized path management for configuration lookup and
run artifacts.
"""

import os
import pathlib
import re
from typing import List, Optional, Union

from oarc_utils.decorators import singleton

from steaneChef.utils.const import DEFAULT_CONFIG_FILENAME, ENV_DATA_DIR, STEANECHEF_DIR

PathLike = Union[str, pathlib.Path]


@singleton
class Paths:
    """
    Utility class for path management in steaneChef.
    """

    @staticmethod
    def ensure_path(path: PathLike) -> pathlib.Path:
        """
        Ensure a directory exists and return it.

        Args:
            path: The directory to ensure exists

        Returns:
            Path: The ensured path
        """
        path_obj = pathlib.Path(path)
        path_obj.mkdir(parents=True, exist_ok=True)
        return path_obj

    @staticmethod
    def get_default_data_dir() -> pathlib.Path:
        """
        Get the default data directory for steaneChef.

        Returns:
            Path: ``$STEANECHEF_DATA_DIR`` if set, otherwise ``~/.steanechef``
        """
        if ENV_DATA_DIR in os.environ:
            return pathlib.Path(os.environ[ENV_DATA_DIR]).resolve()
        return pathlib.Path.home() / STEANECHEF_DIR

    @staticmethod
    def get_default_config_locations() -> List[pathlib.Path]:
        """Config files searched in order when no explicit file is given."""
        return [
            pathlib.Path.cwd() / DEFAULT_CONFIG_FILENAME,
            pathlib.Path.home() / STEANECHEF_DIR / DEFAULT_CONFIG_FILENAME,
        ]

    @staticmethod
    def find_config_file() -> Optional[pathlib.Path]:
        """Return the first existing default config file, if any."""
        for path in Paths().get_default_config_locations():
            if path.exists():
                return path
        return None

    @staticmethod
    def sanitize_filename(name: str) -> str:
        """
        Sanitize a string to be used as a filename.

        Args:
            name: The original name (a registry code name or a file stem)

        Returns:
            A sanitized filename
        """
        name = re.sub(r'[\\/*?:"<>|]', "_", name)
        name = name.strip().replace(" ", "_")
        return name[:250]

    @staticmethod
    def run_dir(base_path: PathLike, command: str, code_ref: str) -> pathlib.Path:
        """
        Directory a command writes into when ``--out`` is not given.

        The name is derived from the command and code only, so repeated runs land in the
        same place and can be compared byte for byte.
        """
        stem = Paths().sanitize_filename(pathlib.Path(code_ref).stem or code_ref)
        return Paths().ensure_path(pathlib.Path(base_path) / "runs" / f"{command}_{stem}")
