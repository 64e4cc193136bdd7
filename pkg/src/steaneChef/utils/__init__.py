"""
Utilities for steaneChef.
"""

from .paths import Paths
from .storage_utils import StorageUtils

__all__ = [
    "Paths",
    "StorageUtils",
]
