"""
Storage utility functions for steaneChef run artifacts.
"""
import dataclasses
import hashlib
import json
from pathlib import Path
from typing import Any, Dict

import pandas as pd

from steaneChef.logs.steanechef_logging import log
from steaneChef.utils.paths import PathLike, Paths


class StorageUtils:
    """Utility methods for writing artifacts deterministically."""

    @staticmethod
    def convert_to_dict(obj: Any) -> Dict:
        """Convert an object to a dictionary if possible."""
        if hasattr(obj, "to_dict"):
            return obj.to_dict()
        elif dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return dataclasses.asdict(obj)
        elif isinstance(obj, dict):
            return obj
        elif hasattr(obj, "__dict__"):
            return dict(obj.__dict__)
        else:
            raise TypeError(f"Cannot convert {type(obj)} to dictionary")

    @staticmethod
    def write_text(path: PathLike, text: str) -> Path:
        """Write text with LF line endings, creating parent directories."""
        path = Path(path)
        Paths().ensure_path(path.parent)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        log.debug("wrote %s", path)
        return path

    @staticmethod
    def write_json(path: PathLike, data: Any) -> Path:
        """Write JSON with sorted keys so equal inputs give equal bytes."""
        if not isinstance(data, (dict, list)):
            data = StorageUtils.convert_to_dict(data)
        text = json.dumps(data, indent=2, sort_keys=True, default=str) + "\n"
        return StorageUtils.write_text(path, text)

    @staticmethod
    def read_json(path: PathLike) -> Any:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)

    @staticmethod
    def write_csv(path: PathLike, frame: pd.DataFrame) -> Path:
        """Write a DataFrame as CSV without the index."""
        path = Path(path)
        Paths().ensure_path(path.parent)
        frame.to_csv(path, index=False, lineterminator="\n", float_format="%.10g")
        log.debug("wrote %s (%d rows)", path, len(frame))
        return path

    @staticmethod
    def sha256_file(path: PathLike) -> str:
        digest = hashlib.sha256()
        with open(path, "rb") as f:
            for block in iter(lambda: f.read(65536), b""):
                digest.update(block)
        return digest.hexdigest()

    @staticmethod
    def sha256_text(text: str) -> str:
        return hashlib.sha256(text.encode("utf-8")).hexdigest()
