"""Ribbon graphs - rotation systems with signed edges."""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from ..exceptions import InputError


@dataclass(frozen=True)
class RibbonEdge:
    """
    A band joining two half-edges.

    Attributes:
        name: Edge name (becomes a medial vertex name)
        first: Half-edge name at one end
        second: Half-edge name at the other end
        sign: +1 for an untwisted band, -1 for a twisted one
    """

    name: str
    first: str
    second: str
    sign: int = 1


@dataclass(frozen=True)
class RibbonGraph:
    """
    A graph with a cyclic half-edge order at each vertex and edge signs.

    Attributes:
        vertices: Vertex names
        rotation: Per vertex, its half-edge names in cyclic order
        edges: Signed edges; each half-edge name is used by exactly one edge
    """

    vertices: Tuple[str, ...]
    rotation: Tuple[Tuple[str, ...], ...]
    edges: Tuple[RibbonEdge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(self.rotation) != len(self.vertices):
            raise InputError(f"{len(self.rotation)} rotations for {len(self.vertices)} vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex names")
        owner: Dict[str, str] = {}
        for v, cycle in zip(self.vertices, self.rotation):
            for h in cycle:
                if h in owner:
                    raise InputError(f"half-edge {h!r} appears at {owner[h]!r} and {v!r}", location=h)
                owner[h] = v
        used: Dict[str, str] = {}
        names = set()
        for e in self.edges:
            if e.name in names:
                raise InputError(f"duplicate edge name {e.name!r}", location=e.name)
            names.add(e.name)
            if e.sign not in (1, -1):
                raise InputError(f"edge {e.name!r} has sign {e.sign}, expected +1 or -1", location=e.name)
            if e.first == e.second:
                raise InputError(f"edge {e.name!r} uses half-edge {e.first!r} twice", location=e.name)
            for h in (e.first, e.second):
                if h not in owner:
                    raise InputError(f"edge {e.name!r} uses half-edge {h!r} not in any rotation", location=h)
                if h in used:
                    raise InputError(f"half-edge {h!r} used by edges {used[h]!r} and {e.name!r}", location=h)
                used[h] = e.name
        unused = [h for h in owner if h not in used]
        if unused:
            raise InputError(f"half-edges without an edge: {unused}", location=unused[0])

    @classmethod
    def from_mapping(
        cls,
        rotation: Mapping[str, Sequence[str]],
        edges: Sequence[Tuple[str, str, str, int]],
    ) -> "RibbonGraph":
        return cls(
            tuple(rotation),
            tuple(tuple(r) for r in rotation.values()),
            tuple(RibbonEdge(*e) for e in edges),
        )

    @cached_property
    def vertex_of(self) -> Dict[str, str]:
        """Half-edge name -> vertex name."""
        return {h: v for v, cycle in zip(self.vertices, self.rotation) for h in cycle}

    @cached_property
    def edge_of(self) -> Dict[str, RibbonEdge]:
        """Half-edge name -> edge using it."""
        return {h: e for e in self.edges for h in (e.first, e.second)}

    def rotation_at(self, vertex: str) -> Tuple[str, ...]:
        return self.rotation[self.vertices.index(vertex)]

    def edge(self, name: str) -> RibbonEdge:
        for e in self.edges:
            if e.name == name:
                return e
        raise InputError(f"unknown edge {name!r}", location=name)

    def ends(self, edge: RibbonEdge) -> Tuple[str, str]:
        return self.vertex_of[edge.first], self.vertex_of[edge.second]

    def graph_edges(self) -> List[Tuple[str, str, str]]:
        """(edge name, u, v) triples for the underlying multigraph."""
        return [(e.name,) + self.ends(e) for e in self.edges]

    def isolated_vertices(self) -> List[str]:
        return [v for v, cycle in zip(self.vertices, self.rotation) if not cycle]

    def with_signs(self, signs: Mapping[str, int]) -> "RibbonGraph":
        edges = tuple(
            RibbonEdge(e.name, e.first, e.second, signs.get(e.name, e.sign)) for e in self.edges
        )
        return RibbonGraph(self.vertices, self.rotation, edges)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": {v: list(r) for v, r in zip(self.vertices, self.rotation)},
            "edges": [[e.name, e.first, e.second, e.sign] for e in self.edges],
        }
