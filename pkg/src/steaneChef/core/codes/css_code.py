"""
CSS code model.

A :class:`CssCode` holds validated check matrices, a canonical pair of logical operator
matrices and a lazily computed distance. Use :func:`validate` to build one.
"""

import itertools
import logging
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from steaneChef.config.config import Config
from steaneChef.core.gf2 import BitMatrix, RowSpace, mat_mul_t
from steaneChef.utils.errors import ContractViolation, CssConditionError

logger = logging.getLogger(__name__)

X = "X"
Z = "Z"
BASES = (X, Z)


def opposite(basis: str) -> str:
    check_basis(basis)
    return Z if basis == X else X


def check_basis(basis: str) -> str:
    if basis not in BASES:
        raise ContractViolation(f"basis must be X or Z, got {basis!r}")
    return basis


class CssCode:
    """
    An [[n, k, d]] CSS code.

    Attributes:
        name (str): Registry name or file stem.
        h_x (BitMatrix): X checks, one independent row per generator.
        h_z (BitMatrix): Z checks.
        logicals_x (BitMatrix): k canonical logical X operators.
        logicals_z (BitMatrix): k logical Z operators with ``logicals_x · logicals_zᵀ = I``.
    """

    def __init__(
        self,
        h_x: BitMatrix,
        h_z: BitMatrix,
        logicals_x: BitMatrix,
        logicals_z: BitMatrix,
        name: str = "code",
        d: Optional[int] = None,
    ):
        self.h_x = h_x
        self.h_z = h_z
        self.logicals_x = logicals_x
        self.logicals_z = logicals_z
        self.name = name
        self._registered_d = d
        self._distances: Dict[str, Optional[int]] = {}

    @property
    def n(self) -> int:
        return self.h_x.cols

    @property
    def k(self) -> int:
        return self.logicals_x.rows

    @property
    def m_x(self) -> int:
        return self.h_x.rows

    @property
    def m_z(self) -> int:
        return self.h_z.rows

    def checks(self, basis: str) -> BitMatrix:
        return self.h_x if check_basis(basis) == X else self.h_z

    def logicals(self, basis: str) -> BitMatrix:
        return self.logicals_x if check_basis(basis) == X else self.logicals_z

    @cached_property
    def x_space(self) -> RowSpace:
        return self.h_x.row_space

    @cached_property
    def z_space(self) -> RowSpace:
        return self.h_z.row_space

    def stabilizers(self, basis: str) -> RowSpace:
        """Row space of the checks of ``basis``: the errors of that type that act trivially."""
        return self.x_space if check_basis(basis) == X else self.z_space

    def distance(self, basis: str) -> Optional[int]:
        """Cached :func:`distance` for one basis."""
        check_basis(basis)
        if basis not in self._distances:
            self._distances[basis] = distance(self, basis)
        return self._distances[basis]

    @property
    def d(self) -> Optional[int]:
        """Registered distance if known, else the computed one (``None`` above the cap)."""
        if self._registered_d is not None:
            return self._registered_d
        dx = self.distance(X)
        dz = self.distance(Z)
        if dx is None or dz is None:
            return None
        return min(dx, dz)

    @property
    def t(self) -> int:
        """Number of correctable errors, ``(d - 1) // 2``."""
        d = self.d
        if d is None:
            raise ContractViolation(f"distance of {self.name} is unknown; register it or raise the cap")
        return (d - 1) // 2

    def stabilizer_weights(self, basis: str) -> List[int]:
        return [v.weight for v in self.checks(basis)]

    def summary(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "m_x": self.m_x,
            "m_z": self.m_z,
            "x_weights": self.stabilizer_weights(X),
            "z_weights": self.stabilizer_weights(Z),
        }

    def label(self) -> str:
        d = self.d if self.d is not None else "?"
        return f"[[{self.n},{self.k},{d}]]"

    def __repr__(self) -> str:
        return f"CssCode({self.name} {self.label()})"


def _independent_rows(h: BitMatrix, which: str) -> BitMatrix:
    space = RowSpace(h.cols)
    kept = []
    for w in h.row_ints():
        before = space.rank
        space = space.extended([w])
        if space.rank > before:
            kept.append(w)
    if len(kept) < h.rows:
        logger.warning("H%s has %d dependent rows; keeping %d independent rows", which, h.rows - len(kept), len(kept))
    return BitMatrix.from_ints(h.cols, kept)


def _logical_candidates(kernel: BitMatrix, stabilizers: RowSpace) -> List[int]:
    """
    Kernel vectors independent modulo the stabilizers, in kernel-basis order.

    Each pick is the canonical (reduced) representative of its coset, not the
    lexicographically smallest kernel vector; the result is deterministic for a
    given pair of check matrices.
    """
    space = stabilizers
    picked = []
    for v in kernel.row_ints():
        rep = space.canonical(v)
        if rep:
            picked.append(rep)
            space = space.extended([rep])
    return picked


def _symplectic_pairs(xs: List[int], zs: List[int]) -> Tuple[List[int], List[int]]:
    xs, zs = list(xs), list(zs)
    out_x, out_z = [], []
    while xs:
        x = xs.pop(0)
        j = next((j for j, z in enumerate(zs) if (x & z).bit_count() & 1), None)
        if j is None:
            raise ContractViolation("logical operators do not pair; check matrices are inconsistent")
        z = zs.pop(j)
        xs = [x2 ^ x if (x2 & z).bit_count() & 1 else x2 for x2 in xs]
        zs = [z2 ^ z if (z2 & x).bit_count() & 1 else z2 for z2 in zs]
        out_x.append(x)
        out_z.append(z)
    return out_x, out_z


def validate(h_x: BitMatrix, h_z: BitMatrix, name: str = "code", d: Optional[int] = None) -> CssCode:
    """
    Check the CSS condition and derive logical operators.

    Args:
        h_x: X check matrix.
        h_z: Z check matrix.
        name: Label carried by the code.
        d: Known distance, if any; skips enumeration when reporting ``code.d``.

    Returns:
        CssCode: The validated code.

    Raises:
        ContractViolation: If the column counts differ.
        CssConditionError: If some X check anticommutes with some Z check.
    """
    if h_x.cols != h_z.cols:
        raise ContractViolation(f"HX has {h_x.cols} columns but HZ has {h_z.cols}")
    n = h_x.cols
    product = mat_mul_t(h_x, h_z)
    for i, w in enumerate(product.row_ints()):
        if w:
            j = (w & -w).bit_length() - 1
            raise CssConditionError(i, j)

    h_x = _independent_rows(h_x, X)
    h_z = _independent_rows(h_z, Z)

    xs = _logical_candidates(h_z.null_space(), h_x.row_space)
    zs = _logical_candidates(h_x.null_space(), h_z.row_space)
    k = n - h_x.rows - h_z.rows
    if len(xs) != k or len(zs) != k:
        raise ContractViolation(f"expected {k} logical qubits, found {len(xs)} X and {len(zs)} Z")
    xs, zs = _symplectic_pairs(xs, zs)
    xs = [h_x.row_space.canonical(v) for v in xs]
    zs = [h_z.row_space.canonical(v) for v in zs]

    code = CssCode(h_x, h_z, BitMatrix.from_ints(n, xs), BitMatrix.from_ints(n, zs), name=name, d=d)
    logger.debug("validated %s: n=%d k=%d m_x=%d m_z=%d", name, n, k, code.m_x, code.m_z)
    return code


def distance(code: CssCode, basis: str, max_weight: Optional[int] = None) -> Optional[int]:
    """
    Minimum weight of a ``basis``-type logical operator.

    Candidates are enumerated in increasing weight; a vector qualifies if it commutes with
    every opposite-type check and is not a stabilizer.

    Returns:
        The distance, or ``None`` when ``n`` exceeds the configured cap, no logical exists,
        or nothing is found up to ``max_weight``.
    """
    check_basis(basis)
    cap = Config().distance_cap
    if code.n > cap:
        logger.warning("distance of %s not computed: n=%d above cap %d", code.name, code.n, cap)
        return None
    if code.k == 0:
        return None
    opposite_cols = code.checks(opposite(basis)).column_masks()
    same = code.stabilizers(basis)
    limit = code.n if max_weight is None else min(max_weight, code.n)
    for w in range(1, limit + 1):
        for support in itertools.combinations(range(code.n), w):
            syndrome = 0
            bits = 0
            for q in support:
                syndrome ^= opposite_cols[q]
                bits |= 1 << q
            if syndrome == 0 and not same.contains(bits):
                return w
    return None


def is_logical(code: CssCode, basis: str, bits: int) -> bool:
    """True iff ``bits`` is a nontrivial ``basis`` logical operator."""
    return code.checks(opposite(basis)).syndrome_int(bits) == 0 and not code.stabilizers(basis).contains(bits)


def logical_action(code: CssCode, basis: str, bits: int) -> int:
    """Bitmask of logical qubits flipped by a ``basis`` error (pairing with opposite logicals)."""
    out = 0
    for i, w in enumerate(code.logicals(opposite(basis)).row_ints()):
        if (w & bits).bit_count() & 1:
            out |= 1 << i
    return out


def code_from_supports(
    n: int, x_supports: Sequence[Sequence[int]], z_supports: Sequence[Sequence[int]], **kwargs
) -> CssCode:
    """Validate a code given its check supports as qubit-index lists."""
    def to_matrix(supports):
        return BitMatrix.from_ints(n, (sum(1 << q for q in s) for s in supports))

    return validate(to_matrix(x_supports), to_matrix(z_supports), **kwargs)
