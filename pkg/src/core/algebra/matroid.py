"""Binary matroids over labelled ground sets."""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Hashable, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..exceptions import BudgetExceeded, InputError
from .gf2 import BitMatrix, rank_of_columns, row_reduce, span_rank


@dataclass(frozen=True)
class BinaryMatroid:
    """
    A binary matroid given by a GF(2) representation.

    Attributes:
        ground: Element labels; element i is column i of ``rep``
        rep: Representation matrix with one column per element
    """

    ground: Tuple[Hashable, ...]
    rep: BitMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "ground", tuple(self.ground))
        if self.rep.cols != len(self.ground):
            raise InputError(f"{len(self.ground)} labels for a {self.rep.cols}-column matrix")
        if len(set(self.ground)) != len(self.ground):
            raise InputError("ground set labels must be distinct")

    @classmethod
    def empty(cls) -> "BinaryMatroid":
        return cls((), BitMatrix(0, 0))

    @classmethod
    def from_rows(cls, ground: Sequence[Hashable], rows: Sequence[Sequence[int]]) -> "BinaryMatroid":
        return cls(tuple(ground), BitMatrix.from_rows(rows, cols=len(ground)))

    @cached_property
    def _positions(self) -> Dict[Hashable, int]:
        return {label: i for i, label in enumerate(self.ground)}

    @property
    def size(self) -> int:
        return len(self.ground)

    def index_of(self, label: Hashable) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise InputError(f"unknown ground element {label!r}", location=label) from None

    def indices(self, labels: Iterable[Hashable]) -> List[int]:
        return [self.index_of(label) for label in labels]

    def mask_of(self, labels: Iterable[Hashable]) -> int:
        mask = 0
        for i in self.indices(labels):
            mask |= 1 << i
        return mask

    # -- rank -----------------------------------------------------------------

    def rank(self, subset: Optional[Iterable[Hashable]] = None) -> int:
        """GF(2) rank of a subset of the ground set (all of it when omitted)."""
        if subset is None:
            return self.rep.rank()
        return rank_of_columns(self.rep, self.indices(subset))

    def rank_mask(self, mask: int) -> int:
        """Rank of the subset whose element indices are the set bits of ``mask``."""
        columns = self.rep.column_masks
        vectors = []
        while mask:
            low = mask & -mask
            vectors.append(columns[low.bit_length() - 1])
            mask ^= low
        return span_rank(vectors)

    def is_independent(self, subset: Iterable[Hashable]) -> bool:
        subset = list(subset)
        return self.rank(subset) == len(subset)

    def is_basis(self, subset: Iterable[Hashable]) -> bool:
        subset = list(subset)
        return len(subset) == self.rank() and self.is_independent(subset)

    def loops(self) -> List[Hashable]:
        return [label for label, col in zip(self.ground, self.rep.column_masks) if not col]

    # -- constructions --------------------------------------------------------

    def restrict(self, subset: Iterable[Hashable]) -> "BinaryMatroid":
        """Restriction to ``subset``; element order follows the ground set."""
        wanted = set(self.indices(subset))
        keep = [i for i in range(self.size) if i in wanted]
        return BinaryMatroid(tuple(self.ground[i] for i in keep), self.rep.select_columns(keep))

    def delete(self, labels: Iterable[Hashable]) -> "BinaryMatroid":
        dropped = set(self.indices(labels))
        return self.restrict(label for i, label in enumerate(self.ground) if i not in dropped)

    def contract(self, label: Hashable) -> "BinaryMatroid":
        """
        Contract one element.

        A loop is simply deleted. Otherwise a row holding the element's 1 is
        used to clear the column from every other row and is then dropped.
        """
        j = self.index_of(label)
        rows = list(self.rep.row_masks)
        bit = 1 << j
        pivot = next((i for i, row in enumerate(rows) if row & bit), None)
        if pivot is None:
            return self.delete([label])
        pivot_row = rows[pivot]
        reduced = [row ^ pivot_row if row & bit else row for i, row in enumerate(rows) if i != pivot]
        keep = [i for i in range(self.size) if i != j]
        matrix = BitMatrix.from_row_masks(reduced, self.size).select_columns(keep)
        return BinaryMatroid(tuple(self.ground[i] for i in keep), matrix)

    def contract_all(self, labels: Iterable[Hashable]) -> "BinaryMatroid":
        result = self
        for label in labels:
            result = result.contract(label)
        return result

    def dual(self) -> "BinaryMatroid":
        """
        Dual matroid via standard-form completion.

        With the reduced form ``R`` and pivot columns ``p_i``, each non-pivot
        column ``j`` yields a dual row with a 1 at ``j`` and ``R[i][j]`` at ``p_i``.
        """
        reduced, pivots = row_reduce(self.rep)
        masks = reduced.row_masks[: len(pivots)]
        pivot_set = set(pivots)
        rows = []
        for j in range(self.size):
            if j in pivot_set:
                continue
            row = 1 << j
            for i, p in enumerate(pivots):
                if (masks[i] >> j) & 1:
                    row |= 1 << p
            rows.append(row)
        return BinaryMatroid(self.ground, BitMatrix.from_row_masks(rows, self.size))

    def direct_sum(self, other: "BinaryMatroid") -> "BinaryMatroid":
        if set(self.ground) & set(other.ground):
            raise InputError("direct sum needs disjoint ground sets")
        shift = self.size
        rows = list(self.rep.row_masks) + [row << shift for row in other.rep.row_masks]
        return BinaryMatroid(self.ground + other.ground, BitMatrix.from_row_masks(rows, self.size + other.size))

    def relabel(self, mapping: Mapping[Hashable, Hashable]) -> "BinaryMatroid":
        return BinaryMatroid(tuple(mapping.get(g, g) for g in self.ground), self.rep)

    # -- comparison -----------------------------------------------------------

    def same_rank_function(
        self,
        other: "BinaryMatroid",
        bijection: Optional[Mapping[Hashable, Hashable]] = None,
        limit: int = 18,
    ) -> bool:
        """
        Exhaustively compare rank functions under a ground-set bijection.

        Args:
            other: Matroid to compare with
            bijection: Map from this ground set onto ``other.ground``; labels
                are matched by equality when omitted
            limit: Largest ground set size that may be enumerated

        Raises:
            BudgetExceeded: If the ground set is larger than ``limit``
            InputError: If the bijection is not onto ``other.ground``
        """
        if self.size != other.size:
            return False
        if self.size > limit:
            raise BudgetExceeded(
                f"rank comparison over 2^{self.size} subsets exceeds limit of {limit} elements",
                limit=limit,
                required=self.size,
            )
        image = [bijection[g] if bijection is not None else g for g in self.ground]
        if len(set(image)) != len(image):
            raise InputError("ground-set map is not injective")
        target = other.indices(image)
        return all(
            self.rank_mask(mask) == other.rank_mask(_map_mask(mask, target))
            for mask in range(1 << self.size)
        )

    def subsets(self) -> Iterator[int]:
        return iter(range(1 << self.size))

    def labels_of(self, mask: int) -> List[Hashable]:
        return [label for i, label in enumerate(self.ground) if (mask >> i) & 1]


def _map_mask(mask: int, target: Sequence[int]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << target[i]
        mask >>= 1
        i += 1
    return out


def cycle_matroid(
    nodes: Sequence[Hashable],
    edges: Sequence[Tuple[Hashable, Hashable, Hashable]],
) -> BinaryMatroid:
    """
    Cycle matroid of a multigraph with loops.

    Args:
        nodes: Vertices of the graph
        edges: (label, u, v) triples; a loop has u == v

    Returns:
        Matroid on the edge labels represented by the GF(2) incidence matrix
    """
    position = {node: i for i, node in enumerate(nodes)}
    rows = [0] * len(nodes)
    for j, (_, u, v) in enumerate(edges):
        if u == v:
            continue
        rows[position[u]] |= 1 << j
        rows[position[v]] |= 1 << j
    labels = tuple(label for label, _, _ in edges)
    return BinaryMatroid(labels, BitMatrix.from_row_masks(rows, len(edges)))
