"""
Dense GF(2) linear algebra.

Matrices store one packed 64-bit word per row (bit ``j`` of a word is column ``j``), so
every code in scope (n <= 64) keeps a whole row in one machine word. Vectors are Python
integers with an explicit length. Both types are immutable once built and safe to share
between threads.

Example:
    >>> h = BitMatrix.from_strings(["1010101", "0110011", "0001111"])
    >>> h.rank()
    3
    >>> in_row_space(h, BitVector.from_string("1010101"))
    True
"""

from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from steaneChef.utils.errors import ContractViolation

WORD_BITS = 64


def _mask(length: int) -> int:
    return (1 << length) - 1


def _parity(value: int) -> int:
    return value.bit_count() & 1


class BitVector:
    """A vector over GF(2) of fixed length."""

    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise ContractViolation(f"negative vector length {length}")
        if bits < 0 or bits >> length:
            raise ContractViolation(f"bits set beyond vector length {length}")
        self.length = length
        self.bits = bits

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for q in support:
            if not 0 <= q < length:
                raise ContractViolation(f"index {q} out of range for length {length}")
            bits |= 1 << q
        return cls(length, bits)

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "BitVector":
        return cls.from_support(len(values), (i for i, b in enumerate(values) if b))

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a 0/1 string; character ``i`` is entry ``i``."""
        text = text.replace(" ", "")
        if set(text) - {"0", "1"}:
            raise ContractViolation(f"not a bit string: {text!r}")
        return cls.from_list([int(ch) for ch in text])

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> List[int]:
        return [i for i in range(self.length) if (self.bits >> i) & 1]

    def to_list(self) -> List[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def _check_same_length(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise ContractViolation(f"length mismatch: {self.length} vs {other.length}")

    def xor(self, other: "BitVector") -> "BitVector":
        self._check_same_length(other)
        return BitVector(self.length, self.bits ^ other.bits)

    __xor__ = xor

    def dot(self, other: "BitVector") -> int:
        """Inner product over GF(2)."""
        self._check_same_length(other)
        return _parity(self.bits & other.bits)

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise ContractViolation(f"index {index} out of range for length {self.length}")
        return (self.bits >> index) & 1

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.length, self.bits))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_list())

    def __repr__(self) -> str:
        return f"BitVector({self})"


class BitMatrix:
    """
    A dense matrix over GF(2) with at most 64 columns.

    Attributes:
        rows (int): Number of rows.
        cols (int): Number of columns.
    """

    def __init__(self, rows: int, cols: int, words: Optional[Iterable[int]] = None):
        if rows < 0 or cols < 0:
            raise ContractViolation(f"invalid shape ({rows}, {cols})")
        if cols > WORD_BITS:
            raise ContractViolation(f"{cols} columns exceed the {WORD_BITS}-bit word")
        if words is None:
            ints = [0] * rows
        else:
            ints = [int(w) for w in words]
        if len(ints) != rows:
            raise ContractViolation(f"expected {rows} row words, got {len(ints)}")
        limit = _mask(cols)
        for i, w in enumerate(ints):
            if w < 0 or w & ~limit:
                raise ContractViolation(f"row {i} has bits beyond column {cols}")
        self.rows = rows
        self.cols = cols
        self._ints: Tuple[int, ...] = tuple(ints)
        self._words = np.array(ints, dtype=np.uint64)
        self._words.setflags(write=False)

    # construction

    @classmethod
    def from_ints(cls, cols: int, ints: Iterable[int]) -> "BitMatrix":
        ints = list(ints)
        return cls(len(ints), cols, ints)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "BitMatrix":
        """Build from nested 0/1 lists. ``cols`` is needed only for an empty row list."""
        if not rows:
            return cls(0, cols or 0)
        width = len(rows[0])
        if cols is not None and cols != width:
            raise ContractViolation(f"rows have {width} entries, expected {cols}")
        words = []
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ContractViolation(f"row {i} has {len(row)} entries, expected {width}")
            words.append(BitVector.from_list(row).bits)
        return cls(len(rows), width, words)

    @classmethod
    def from_strings(cls, rows: Sequence[str], cols: Optional[int] = None) -> "BitMatrix":
        return cls.from_rows([BitVector.from_string(r).to_list() for r in rows], cols)

    @classmethod
    def from_vectors(cls, cols: int, vectors: Iterable[BitVector]) -> "BitMatrix":
        vectors = list(vectors)
        for v in vectors:
            if v.length != cols:
                raise ContractViolation(f"vector of length {v.length} in a {cols}-column matrix")
        return cls(len(vectors), cols, [v.bits for v in vectors])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    # access

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def words(self) -> np.ndarray:
        """Read-only packed row words."""
        return self._words

    def row_ints(self) -> Tuple[int, ...]:
        return self._ints

    def row(self, i: int) -> BitVector:
        if not 0 <= i < self.rows:
            raise ContractViolation(f"row {i} out of range for {self.rows} rows")
        return BitVector(self.cols, self._ints[i])

    def __iter__(self) -> Iterator[BitVector]:
        return (BitVector(self.cols, w) for w in self._ints)

    def get(self, i: int, j: int) -> int:
        self._check_col(j)
        return (self.row(i).bits >> j) & 1

    @cached_property
    def _column_masks(self) -> Tuple[int, ...]:
        masks = [0] * self.cols
        for i, w in enumerate(self._ints):
            while w:
                low = w & -w
                masks[low.bit_length() - 1] |= 1 << i
                w ^= low
        return tuple(masks)

    def column_masks(self) -> Tuple[int, ...]:
        """Column-major mirror: entry ``j`` has bit ``i`` set iff ``m[i, j] == 1``."""
        return self._column_masks

    def column(self, j: int) -> BitVector:
        self._check_col(j)
        return BitVector(self.rows, self._column_masks[j])

    @property
    def nnz(self) -> int:
        return sum(w.bit_count() for w in self._ints)

    def nonzero_columns(self) -> List[int]:
        return [j for j, m in enumerate(self._column_masks) if m]

    def to_array(self) -> np.ndarray:
        """Unpacked ``(rows, cols)`` uint8 array."""
        if self.rows == 0:
            return np.zeros((0, self.cols), dtype=np.uint8)
        shifts = np.arange(self.cols, dtype=np.uint64)
        return ((self._words[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.uint8)

    def to_strings(self) -> List[str]:
        return [str(v) for v in self]

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.cols != self.cols:
            raise ContractViolation(f"column mismatch: {self.cols} vs {other.cols}")
        return BitMatrix(self.rows + other.rows, self.cols, self._ints + other._ints)

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.cols, self.rows, self._column_masks)

    def permute_columns(self, perm: Sequence[int]) -> "BitMatrix":
        """Column ``j`` moves to column ``perm[j]``."""
        if sorted(perm) != list(range(self.cols)):
            raise ContractViolation("not a permutation of the columns")
        words = []
        for w in self._ints:
            out = 0
            for j, target in enumerate(perm):
                if (w >> j) & 1:
                    out |= 1 << target
            words.append(out)
        return BitMatrix(self.rows, self.cols, words)

    def _check_col(self, j: int) -> None:
        if not 0 <= j < self.cols:
            raise ContractViolation(f"column {j} out of range for {self.cols} columns")

    # algebra

    def col_add(self, src: int, dst: int) -> "BitMatrix":
        """Return a copy with column ``dst`` replaced by ``col[dst] ^ col[src]``."""
        self._check_col(src)
        self._check_col(dst)
        if src == dst:
            raise ContractViolation("col_add needs distinct columns")
        if self.rows == 0:
            return self
        src_bits = (self._words >> np.uint64(src)) & np.uint64(1)
        words = self._words ^ (src_bits << np.uint64(dst))
        return BitMatrix(self.rows, self.cols, words.tolist())

    def rref_with_pivots(self) -> Tuple["BitMatrix", List[int]]:
        """Reduced row-echelon form with pivot columns in increasing order."""
        rows = list(self._ints)
        pivots: List[int] = []
        r = 0
        for c in range(self.cols):
            bit = 1 << c
            pick = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
            if pick is None:
                continue
            rows[r], rows[pick] = rows[pick], rows[r]
            for i in range(len(rows)):
                if i != r and rows[i] & bit:
                    rows[i] ^= rows[r]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return BitMatrix(self.rows, self.cols, rows), pivots

    def rref(self) -> Tuple["BitMatrix", int]:
        reduced, pivots = self.rref_with_pivots()
        return reduced, len(pivots)

    @cached_property
    def row_space(self) -> "RowSpace":
        return RowSpace(self.cols, self._ints)

    def rank(self) -> int:
        return self.row_space.rank

    def in_row_space(self, v: BitVector) -> bool:
        if v.length != self.cols:
            raise ContractViolation(f"vector length {v.length} != {self.cols} columns")
        return self.row_space.contains(v.bits)

    def null_space(self) -> "BitMatrix":
        """Basis of ``{v : m v = 0}``, one row per free column in increasing order."""
        reduced, pivots = self.rref_with_pivots()
        pivot_rows = list(zip(pivots, reduced.row_ints()))
        basis = []
        for f in range(self.cols):
            if f in pivots:
                continue
            v = 1 << f
            for p, row in pivot_rows:
                if (row >> f) & 1:
                    v |= 1 << p
            basis.append(v)
        return BitMatrix(len(basis), self.cols, basis)

    def apply(self, v: BitVector) -> BitVector:
        """Syndrome ``m v`` as a vector of length ``rows``."""
        if v.length != self.cols:
            raise ContractViolation(f"vector length {v.length} != {self.cols} columns")
        out = 0
        for i, w in enumerate(self._ints):
            if _parity(w & v.bits):
                out |= 1 << i
        return BitVector(self.rows, out)

    def syndrome_int(self, bits: int) -> int:
        out = 0
        for i, w in enumerate(self._ints):
            if _parity(w & bits):
                out |= 1 << i
        return out

    def is_zero(self) -> bool:
        return not any(self._ints)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and self._ints == other._ints

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._ints))

    def __str__(self) -> str:
        return "\n".join(self.to_strings())

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


class RowSpace:
    """
    A reduced basis for the span of a set of vectors.

    Each basis vector is keyed by its pivot (lowest set bit) and is zero at every other
    pivot, so :meth:`canonical` clears pivot bits in one pass. The result is the unique
    coset representative of ``v`` and is linear in ``v``.
    """

    __slots__ = ("length", "_basis", "_pivot_mask")

    def __init__(self, length: int, vectors: Iterable[int] = ()):
        self.length = length
        self._basis: Dict[int, int] = {}
        self._pivot_mask = 0
        for v in vectors:
            self._insert(v)

    def _insert(self, v: int) -> bool:
        v = self.canonical(v)
        if not v:
            return False
        low = v & -v
        p = low.bit_length() - 1
        for q, row in self._basis.items():
            if row & low:
                self._basis[q] = row ^ v
        self._basis[p] = v
        self._pivot_mask |= low
        return True

    def extended(self, vectors: Iterable[int]) -> "RowSpace":
        """A new space spanned by this one plus ``vectors``."""
        out = RowSpace(self.length)
        out._basis = dict(self._basis)
        out._pivot_mask = self._pivot_mask
        for v in vectors:
            out._insert(v)
        return out

    @property
    def rank(self) -> int:
        return len(self._basis)

    def canonical(self, v: int) -> int:
        hit = v & self._pivot_mask
        while hit:
            low = hit & -hit
            v ^= self._basis[low.bit_length() - 1]
            hit ^= low
        return v

    def contains(self, v: int) -> bool:
        return self.canonical(v) == 0

    def basis(self) -> List[int]:
        """Basis vectors ordered by pivot."""
        return [self._basis[p] for p in sorted(self._basis)]

    def pivots(self) -> List[int]:
        return sorted(self._basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RowSpace):
            return NotImplemented
        return self.length == other.length and self._basis == other._basis

    def __hash__(self) -> int:
        return hash((self.length, tuple(sorted(self._basis.items()))))

    def __repr__(self) -> str:
        return f"RowSpace(length={self.length}, rank={self.rank})"


# Functional surface


def col_add(m: BitMatrix, src: int, dst: int) -> BitMatrix:
    return m.col_add(src, dst)


def rref(m: BitMatrix) -> Tuple[BitMatrix, int]:
    return m.rref()


def rank(m: BitMatrix) -> int:
    return m.rank()


def in_row_space(m: BitMatrix, v: BitVector) -> bool:
    return m.in_row_space(v)


def null_space(m: BitMatrix) -> BitMatrix:
    return m.null_space()


def mat_mul_t(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Return ``a · bᵀ`` over GF(2)."""
    if a.cols != b.cols:
        raise ContractViolation(f"column mismatch: {a.cols} vs {b.cols}")
    b_rows = b.row_ints()
    words = []
    for w in a.row_ints():
        out = 0
        for j, u in enumerate(b_rows):
            if _parity(w & u):
                out |= 1 << j
        words.append(out)
    return BitMatrix(a.rows, b.rows, words)


def same_row_space(a: BitMatrix, b: BitMatrix) -> bool:
    if a.cols != b.cols:
        return False
    return a.row_space == b.row_space
