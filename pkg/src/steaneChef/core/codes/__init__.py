"""CSS codes: model, registry, check-matrix files and qubit permutations."""

from steaneChef.core.codes.check_file import parse_check_file, serialize_check_file
from steaneChef.core.codes.css_code import BASES, X, Z, CssCode, distance, opposite, validate
from steaneChef.core.codes.permutations import (
    find_rotation_fix,
    is_automorphism,
    permute_circuit,
)
from steaneChef.core.codes.registry import available_codes, registry_lookup, rotated_surface_code

__all__ = [
    "BASES",
    "X",
    "Z",
    "CssCode",
    "available_codes",
    "distance",
    "find_rotation_fix",
    "is_automorphism",
    "opposite",
    "parse_check_file",
    "permute_circuit",
    "registry_lookup",
    "rotated_surface_code",
    "serialize_check_file",
    "validate",
]
