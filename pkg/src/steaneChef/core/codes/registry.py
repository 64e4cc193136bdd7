"""
Built-in code registry.

Color codes are transcribed plaquette by plaquette; H_X and H_Z share the same supports.
Rotated surface codes come from :func:`rotated_surface_code`.
"""

from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

from steaneChef.core.codes.css_code import CssCode, code_from_supports
from steaneChef.utils.errors import ContractViolation, UnknownCodeError

STEANE_PLAQUETTES = [
    [0, 2, 4, 6],
    [1, 2, 5, 6],
    [3, 4, 5, 6],
]

# 4.8.8 triangle: qubits 0..11 run around the boundary, 0/4/8 are corners.
CC_4_8_8_17_PLAQUETTES = [
    [0, 1, 11, 16],
    [1, 2, 6, 7, 12, 14, 15, 16],
    [2, 3, 12, 13],
    [3, 4, 5, 13],
    [5, 6, 12, 13],
    [7, 8, 9, 14],
    [9, 10, 14, 15],
    [10, 11, 15, 16],
]

# 6.6.6 triangle: boundary 0..11 with corners 0/4/8, interior 12..18, 15 at the centre.
CC_6_6_6_19_PLAQUETTES = [
    [0, 1, 11, 14],
    [1, 2, 14, 18],
    [2, 3, 12, 15, 16, 18],
    [3, 4, 5, 12],
    [5, 6, 12, 16],
    [6, 7, 13, 15, 16, 17],
    [7, 8, 9, 13],
    [9, 10, 13, 17],
    [10, 11, 14, 15, 17, 18],
]

# Rotation of the 6.6.6 triangle by a third of a turn in the labelling above.
CC_6_6_6_19_ROTATION: Tuple[int, ...] = tuple(
    [(i + 4) % 12 for i in range(12)] + [13, 14, 12, 15, 17, 18, 16]
)

NOT_SHIPPED = {
    "cc_4_8_8_31": "[[31,1,7]] 4.8.8 color code: d=7 needs 3-distinctness checks far past desk scale",
    "code_20_2_6": "[[20,2,6]]: no standard check matrices are pinned down for this instance",
    "code_39_1_7": "[[39,1,7]]: no standard check matrices are pinned down for this instance",
}


def rotated_surface_supports(d: int) -> Tuple[List[List[int]], List[List[int]]]:
    """
    Check supports of the rotated surface code of odd distance ``d``.

    Qubit ``(r, c)`` has index ``r * d + c``. A face is named by its top-left corner
    ``(r, c)`` with ``-1 <= r, c <= d - 1`` and covers the in-range qubits of the 2x2
    block. Bulk faces alternate X/Z; weight-2 faces sit on the top and bottom (X) and
    left and right (Z) boundaries.
    """
    if d < 3 or d % 2 == 0:
        raise ContractViolation(f"rotated surface code needs odd d >= 3, got {d}")
    x_faces, z_faces = [], []
    for r in range(-1, d):
        for c in range(-1, d):
            qubits = [
                rr * d + cc
                for rr in (r, r + 1)
                for cc in (c, c + 1)
                if 0 <= rr < d and 0 <= cc < d
            ]
            bulk_r = 0 <= r < d - 1
            bulk_c = 0 <= c < d - 1
            even = (r + c) % 2 == 0
            if bulk_r and bulk_c:
                (x_faces if even else z_faces).append(qubits)
            elif bulk_c and not bulk_r and even:
                x_faces.append(qubits)
            elif bulk_r and not bulk_c and not even:
                z_faces.append(qubits)
    return x_faces, z_faces


def rotated_surface_code(d: int) -> CssCode:
    x_faces, z_faces = rotated_surface_supports(d)
    return code_from_supports(d * d, x_faces, z_faces, name=f"surface_{d * d}", d=d)


def _color_code(name: str, n: int, plaquettes: Sequence[Sequence[int]], d: int) -> Callable[[], CssCode]:
    def build() -> CssCode:
        return code_from_supports(n, plaquettes, plaquettes, name=name, d=d)

    return build


_BUILDERS: Dict[str, Callable[[], CssCode]] = {
    "steane": _color_code("steane", 7, STEANE_PLAQUETTES, 3),
    "cc_4_8_8_17": _color_code("cc_4_8_8_17", 17, CC_4_8_8_17_PLAQUETTES, 5),
    "cc_6_6_6_19": _color_code("cc_6_6_6_19", 19, CC_6_6_6_19_PLAQUETTES, 5),
    "surface_9": lambda: rotated_surface_code(3),
    "surface_25": lambda: rotated_surface_code(5),
}


def available_codes() -> List[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def registry_lookup(name: str) -> CssCode:
    """
    Return a registered code.

    Raises:
        UnknownCodeError: If ``name`` is not registered; the error lists available names.
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownCodeError(name, available_codes(), NOT_SHIPPED.get(name)) from None
    return builder()
