"""Exact algebra: GF(2) matrices, binary matroids and sparse polynomials."""

from .gf2 import BitMatrix, rank_of_columns, rank_of_rows, row_reduce, span_rank
from .matroid import BinaryMatroid
from .polynomial import SparsePoly

__all__ = [
    "BitMatrix",
    "rank_of_columns",
    "rank_of_rows",
    "row_reduce",
    "span_rank",
    "BinaryMatroid",
    "SparsePoly",
]
