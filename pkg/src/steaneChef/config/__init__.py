"""
steaneChef Configuration Package.

This package provides the application-level configuration singleton, loaded from
defaults, ``STEANECHEF_*`` environment variables and an optional INI file.
"""

from steaneChef.config.config import Config, apply_config_file, load_from_file

__all__ = [
    "Config",
    "apply_config_file",
    "load_from_file",
]
