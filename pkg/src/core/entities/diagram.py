"""Planar diagram codes for knot and link diagrams."""

from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from ..exceptions import InputError

Crossing = Tuple[int, int, int, int]


@dataclass(frozen=True)
class PlanarDiagramCode:
    """
    Crossings as 4-tuples of arc labels.

    Each tuple lists the arcs in counter-clockwise order starting from the
    incoming under-strand.

    Attributes:
        crossings: One 4-tuple of arc labels per crossing
        free_loops: Closed components with no crossing
        writhe: Diagram writhe when known
    """

    crossings: Tuple[Crossing, ...]
    free_loops: int = 0
    writhe: Optional[int] = None

    def __post_init__(self) -> None:
        crossings = tuple(tuple(int(a) for a in c) for c in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        for i, c in enumerate(crossings):
            if len(c) != 4:
                raise InputError(f"crossing {i} has {len(c)} arcs, expected 4", location=i)
        for arc, count in Counter(a for c in crossings for a in c).items():
            if count != 2:
                raise InputError(f"arc {arc} is used {count} times, expected 2", location=arc)
        if self.free_loops < 0:
            raise InputError("free loop count cannot be negative")

    @classmethod
    def unknot(cls) -> "PlanarDiagramCode":
        return cls((), free_loops=1, writhe=0)

    @property
    def n(self) -> int:
        return len(self.crossings)

    def vertex_name(self, i: int) -> str:
        return f"x{i}"

    def disjoint_union(self, other: "PlanarDiagramCode") -> "PlanarDiagramCode":
        mine = [a for c in self.crossings for a in c]
        theirs = [a for c in other.crossings for a in c]
        shift = 0
        if mine and theirs:
            shift = max(mine) + 1 - min(theirs)
        moved = tuple(tuple(a + shift for a in c) for c in other.crossings)
        writhe = None
        if self.writhe is not None and other.writhe is not None:
            writhe = self.writhe + other.writhe
        return PlanarDiagramCode(self.crossings + moved, self.free_loops + other.free_loops, writhe)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "crossings": [list(c) for c in self.crossings],
            "free_loops": self.free_loops,
            "writhe": self.writhe,
        }
