"""
Dense GF(2) linear algebra.

Rows are packed little-endian into 64-bit words with numpy, so bit ``j`` of a
row lives in word ``j // 64`` at position ``j % 64``. Padding bits past the
last column are always zero.
"""

from functools import cached_property
from typing import Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import InputError

WORD_BITS = 64
_WORD = np.dtype("<u8")


def _word_count(cols: int) -> int:
    return max(1, (cols + WORD_BITS - 1) // WORD_BITS)


def span_rank(vectors: Iterable[int]) -> int:
    """
    Dimension of the span of integer bit-vectors.

    Each vector is reduced against a basis keyed by its leading bit.
    """
    basis = {}
    for vector in vectors:
        while vector:
            top = vector.bit_length() - 1
            pivot = basis.get(top)
            if pivot is None:
                basis[top] = vector
                break
            vector ^= pivot
    return len(basis)


class BitMatrix:
    """
    An immutable GF(2) matrix with packed rows.

    Attributes:
        rows: Number of rows
        cols: Number of columns
        data: ``rows x words`` array of little-endian uint64 words
        labels: Optional column labels, one per column
    """

    def __init__(
        self,
        rows: int,
        cols: int,
        data: Optional[np.ndarray] = None,
        labels: Optional[Sequence[Hashable]] = None,
    ):
        if rows < 0 or cols < 0:
            raise InputError(f"matrix shape must be non-negative, got {rows}x{cols}")
        words = _word_count(cols)
        if data is None:
            data = np.zeros((rows, words), dtype=_WORD)
        else:
            data = np.array(data, dtype=_WORD, copy=True).reshape(rows, words)
        tail = cols % WORD_BITS
        if tail and rows:
            data[:, -1] &= np.uint64((1 << tail) - 1)
        data.setflags(write=False)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != cols:
                raise InputError(f"{len(labels)} labels for {cols} columns")
        self._rows = rows
        self._cols = cols
        self._data = data
        self._labels = labels

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        cols: Optional[int] = None,
        labels: Optional[Sequence[Hashable]] = None,
    ) -> "BitMatrix":
        """Build from a list of 0/1 rows (lists or '0101' strings)."""
        parsed = [[int(bit) & 1 for bit in row] for row in rows]
        if cols is None:
            cols = len(parsed[0]) if parsed else (len(labels) if labels is not None else 0)
        if any(len(row) != cols for row in parsed):
            raise InputError("rows have inconsistent lengths")
        words = _word_count(cols)
        bits = np.zeros((len(parsed), words * WORD_BITS), dtype=np.uint8)
        if parsed and cols:
            bits[:, :cols] = np.array(parsed, dtype=np.uint8)
        packed = np.packbits(bits, axis=-1, bitorder="little").view(_WORD)
        return cls(len(parsed), cols, packed, labels)

    @classmethod
    def from_row_masks(
        cls,
        masks: Sequence[int],
        cols: int,
        labels: Optional[Sequence[Hashable]] = None,
    ) -> "BitMatrix":
        """Build from integer row masks, bit ``j`` being column ``j``."""
        words = _word_count(cols)
        data = np.zeros((len(masks), words), dtype=_WORD)
        for i, mask in enumerate(masks):
            if mask < 0 or mask >> cols:
                raise InputError(f"row {i} has bits beyond column {cols - 1}")
            data[i] = np.frombuffer(mask.to_bytes(words * 8, "little"), dtype=_WORD)
        return cls(len(masks), cols, data, labels)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_row_masks([1 << i for i in range(n)], n)

    # -- accessors ------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def labels(self) -> Optional[Tuple[Hashable, ...]]:
        return self._labels

    @cached_property
    def row_masks(self) -> Tuple[int, ...]:
        """Rows as Python integers."""
        return tuple(int.from_bytes(row.tobytes(), "little") for row in self._data)

    @cached_property
    def column_masks(self) -> Tuple[int, ...]:
        """Columns as Python integers, bit ``i`` being row ``i``."""
        columns = [0] * self._cols
        for i, row in enumerate(self.row_masks):
            while row:
                low = row & -row
                columns[low.bit_length() - 1] |= 1 << i
                row ^= low
        return tuple(columns)

    def get(self, row: int, col: int) -> int:
        if not (0 <= row < self._rows and 0 <= col < self._cols):
            raise InputError(f"entry ({row}, {col}) outside {self._rows}x{self._cols} matrix")
        return (self.row_masks[row] >> col) & 1

    def to_lists(self) -> List[List[int]]:
        return [[(mask >> j) & 1 for j in range(self._cols)] for mask in self.row_masks]

    def to_strings(self) -> List[str]:
        return ["".join(str(bit) for bit in row) for row in self.to_lists()]

    # -- derived matrices -----------------------------------------------------

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_row_masks(list(self.column_masks), self._rows)

    def select_columns(self, indices: Sequence[int]) -> "BitMatrix":
        """A fresh matrix made of the given columns, in the given order."""
        self._check_columns(indices)
        masks = []
        for row in self.row_masks:
            mask = 0
            for k, j in enumerate(indices):
                if (row >> j) & 1:
                    mask |= 1 << k
            masks.append(mask)
        labels = None
        if self._labels is not None:
            labels = [self._labels[j] for j in indices]
        return BitMatrix.from_row_masks(masks, len(indices), labels)

    def select_rows(self, indices: Sequence[int]) -> "BitMatrix":
        masks = self.row_masks
        return BitMatrix.from_row_masks([masks[i] for i in indices], self._cols, self._labels)

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.rows != self._rows:
            raise InputError("hstack needs matching row counts")
        shift = self._cols
        masks = [a | (b << shift) for a, b in zip(self.row_masks, other.row_masks)]
        return BitMatrix.from_row_masks(masks, self._cols + other.cols)

    def with_labels(self, labels: Optional[Sequence[Hashable]]) -> "BitMatrix":
        return BitMatrix(self._rows, self._cols, self._data, labels)

    def rank(self) -> int:
        return span_rank(self.row_masks)

    # -- helpers --------------------------------------------------------------

    def _check_columns(self, indices: Iterable[int]) -> None:
        for j in indices:
            if not 0 <= j < self._cols:
                raise InputError(f"column index {j} out of range 0..{self._cols - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self._rows == other.rows
            and self._cols == other.cols
            and bool(np.array_equal(self._data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self.row_masks))

    def __repr__(self) -> str:
        return f"BitMatrix({self._rows}x{self._cols}, rows={self.to_strings()})"


def rank_of_columns(m: BitMatrix, subset: Iterable[int]) -> int:
    """
    GF(2) rank of the selected columns of ``m``.

    Args:
        m: Matrix, left unchanged
        subset: Column indices

    Returns:
        Dimension of the span of the selected columns

    Raises:
        InputError: If an index is out of range
    """
    subset = list(subset)
    m._check_columns(subset)
    columns = m.column_masks
    return span_rank(columns[j] for j in subset)


def rank_of_rows(m: BitMatrix, subset: Iterable[int]) -> int:
    """GF(2) rank of the selected rows of ``m``."""
    subset = list(subset)
    for i in subset:
        if not 0 <= i < m.rows:
            raise InputError(f"row index {i} out of range 0..{m.rows - 1}")
    masks = m.row_masks
    return span_rank(masks[i] for i in subset)


def row_reduce(m: BitMatrix) -> Tuple[BitMatrix, List[int]]:
    """
    Reduced row-echelon form over GF(2).

    Zero rows are kept at the bottom so the shape is unchanged.

    Returns:
        (reduced matrix, strictly increasing pivot columns)
    """
    data = np.array(m.data, copy=True)
    pivots: List[int] = []
    r = 0
    for j in range(m.cols):
        if r == m.rows:
            break
        word, bit = divmod(j, WORD_BITS)
        shift = np.uint64(bit)
        hits = np.flatnonzero((data[r:, word] >> shift) & np.uint64(1))
        if hits.size == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            data[[r, i]] = data[[i, r]]
        column = ((data[:, word] >> shift) & np.uint64(1)).astype(bool)
        column[r] = False
        if column.any():
            data[column] = data[column] ^ data[r]
        pivots.append(j)
        r += 1
    return BitMatrix(m.rows, m.cols, data, m.labels), pivots
