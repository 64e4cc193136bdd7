"""GF(2) vectors, matrices and cached row spaces."""

from steaneChef.core.gf2.bitmatrix import (
    BitMatrix,
    BitVector,
    RowSpace,
    col_add,
    in_row_space,
    mat_mul_t,
    null_space,
    rank,
    rref,
    same_row_space,
)

__all__ = [
    "BitMatrix",
    "BitVector",
    "RowSpace",
    "col_add",
    "in_row_space",
    "mat_mul_t",
    "null_space",
    "rank",
    "rref",
    "same_row_space",
]
