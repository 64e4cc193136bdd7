"""
Synthesis settings.

Loaded from JSON or YAML files with the same field names; unknown keys are rejected.
"""

import dataclasses
import json
import pathlib
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Union

import yaml

from steaneChef.utils.const import (
    DEFAULT_MAX_BACKTRACKS,
    DEFAULT_MAX_RESTARTS,
    DEFAULT_PERTURBATION_PROB,
    DEFAULT_SEED,
)
from steaneChef.utils.errors import ConfigParseError


@dataclass(frozen=True)
class SynthConfig:
    """
    Parameters of greedy and fault-set guided synthesis.

    Attributes:
        seed: Seed of the tie-breaking RNG; restart ``r`` uses ``seed ^ r``.
        max_backtracks: Backtracks allowed in one attempt before restarting.
        max_restarts: Restarts allowed after the first attempt.
        perturbation_prob: Chance of trying the second-cheapest gates first.
        forbid_ref_last_layer: Keep the last CNOT layer disjoint from the references'.
        forbid_ref_substructures: Skip gate pairs that reproduce a heavy reference error.
        start_from_rref: Start the fourth circuit from the reduced row-echelon form.
        rref_stage3: Start the third circuit from the reduced row-echelon form as well.
        optimize_depth: Fill one elimination layer before reusing a qubit.
    """

    seed: int = DEFAULT_SEED
    max_backtracks: int = DEFAULT_MAX_BACKTRACKS
    max_restarts: int = DEFAULT_MAX_RESTARTS
    perturbation_prob: float = DEFAULT_PERTURBATION_PROB
    forbid_ref_last_layer: bool = True
    forbid_ref_substructures: bool = True
    start_from_rref: bool = True
    rref_stage3: bool = False
    optimize_depth: bool = True

    def __post_init__(self):
        if not 0.0 <= self.perturbation_prob <= 1.0:
            raise ConfigParseError(f"perturbation_prob must lie in [0, 1], got {self.perturbation_prob}")
        for name in ("max_backtracks", "max_restarts"):
            if getattr(self, name) < 0:
                raise ConfigParseError(f"{name} must be non-negative")

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "SynthConfig":
        fields = {f.name: f for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - set(fields))
        if unknown:
            raise ConfigParseError(f"unknown synthesis option(s): {', '.join(unknown)}")
        values = {}
        for key, value in data.items():
            default = fields[key].default
            if isinstance(default, bool):
                if not isinstance(value, bool):
                    raise ConfigParseError(f"{key} must be true or false")
            elif isinstance(default, int):
                if isinstance(value, bool) or not isinstance(value, int):
                    raise ConfigParseError(f"{key} must be an integer")
            elif isinstance(default, float):
                if isinstance(value, bool) or not isinstance(value, (int, float)):
                    raise ConfigParseError(f"{key} must be a number")
                value = float(value)
            values[key] = value
        return cls(**values)

    @classmethod
    def from_file(cls, path: Union[str, pathlib.Path]) -> "SynthConfig":
        """Read a ``.json`` or ``.yaml``/``.yml`` file."""
        path = pathlib.Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigParseError(f"cannot read {path}: {e}")
        try:
            if path.suffix.lower() in (".yaml", ".yml"):
                data = yaml.safe_load(text) or {}
            else:
                data = json.loads(text)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            line = getattr(e, "lineno", None)
            mark = getattr(e, "problem_mark", None)
            if mark is not None:
                line = mark.line + 1
            raise ConfigParseError(str(e), line)
        if not isinstance(data, dict):
            raise ConfigParseError("synthesis config must be a mapping")
        return cls.from_dict(data)

    def to_dict(self) -> Dict[str, Any]:
        return dataclasses.asdict(self)

    def replace(self, **changes) -> "SynthConfig":
        return dataclasses.replace(self, **changes)
