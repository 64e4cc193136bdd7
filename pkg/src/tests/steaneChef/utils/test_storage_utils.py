from dataclasses import dataclass

import pandas as pd
import pytest

from steaneChef.utils.storage_utils import StorageUtils


@dataclass
class Point:
    x: int
    y: int


def test_json_is_sorted_and_stable(tmp_path):
    path = StorageUtils.write_json(tmp_path / "a.json", {"b": 1, "a": [1, 2]})
    assert path.read_text(encoding="utf-8") == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
    assert StorageUtils.read_json(path) == {"a": [1, 2], "b": 1}


def test_json_from_dataclass(tmp_path):
    path = StorageUtils.write_json(tmp_path / "nested" / "p.json", Point(1, 2))
    assert StorageUtils.read_json(path) == {"x": 1, "y": 2}


def test_convert_rejects_plain_values():
    with pytest.raises(TypeError):
        StorageUtils.convert_to_dict(3)


def test_csv_without_index(tmp_path):
    frame = pd.DataFrame([{"p": 0.001, "shots": 10}])
    path = StorageUtils.write_csv(tmp_path / "x.csv", frame)
    assert path.read_text(encoding="utf-8") == "p,shots\n0.001,10\n"


def test_digests_agree(tmp_path):
    path = StorageUtils.write_text(tmp_path / "t.txt", "abc\n")
    assert StorageUtils.sha256_file(path) == StorageUtils.sha256_text("abc\n")
