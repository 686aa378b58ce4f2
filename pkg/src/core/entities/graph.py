"""4-regular graph entity - vertices with four half-edge slots joined by edges."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..exceptions import InputError

SLOTS = 4


@dataclass(frozen=True, order=True)
class HalfEdge:
    """
    One end of an edge, sitting in a slot of a vertex.

    Attributes:
        vertex: Vertex name
        slot: Slot index 0..3
    """

    vertex: str
    slot: int

    def __str__(self) -> str:
        return f"{self.vertex}.{self.slot}"

    @classmethod
    def parse(cls, text: str) -> "HalfEdge":
        """Parse ``name.slot``; the name may itself contain dots."""
        name, dot, slot = text.strip().rpartition(".")
        if not dot or not name or not slot.isdigit():
            raise InputError(f"expected <vertex>.<slot>, got {text!r}")
        return cls(name, int(slot))


Edge = Tuple[HalfEdge, HalfEdge]


def _normal_edge(edge: Sequence[HalfEdge]) -> Edge:
    a, b = edge
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of checking the half-edge invariants.

    Attributes:
        ok: Whether every slot is used exactly once by a proper edge
        problem: Short problem kind, e.g. ``unused_slot``
        message: Human-readable description
        location: First violated slot
    """

    ok: bool
    problem: Optional[str] = None
    message: str = "ok"
    location: Optional[HalfEdge] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "problem": self.problem,
            "message": self.message,
            "location": str(self.location) if self.location else None,
        }


@dataclass(frozen=True)
class FourRegularGraph:
    """
    A 4-regular multigraph in half-edge form.

    Loops and parallel edges are allowed. Construction does not check
    4-regularity; ``validate`` reports problems and tracing refuses invalid
    graphs. Edges are stored sorted so equal structures compare equal.

    Attributes:
        vertices: Vertex names in declaration order (fixes indices)
        edges: Unordered pairs of half-edges
    """

    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(sorted(_normal_edge(e) for e in self.edges)))

    @classmethod
    def empty(cls) -> "FourRegularGraph":
        return cls((), ())

    @classmethod
    def from_pairs(cls, vertices: Sequence[str], pairs: Iterable[Tuple[str, str]]) -> "FourRegularGraph":
        """Build from ``("a.0", "b.2")`` style string pairs."""
        return cls(tuple(vertices), tuple((HalfEdge.parse(a), HalfEdge.parse(b)) for a, b in pairs))

    # -- validation -----------------------------------------------------------

    def check(self) -> ValidationReport:
        """Check that every slot is used by exactly one edge with distinct ends."""
        names = set()
        for name in self.vertices:
            if name in names:
                return ValidationReport(False, "duplicate_vertex", f"vertex {name!r} declared twice")
            names.add(name)
        used: Dict[HalfEdge, Edge] = {}
        for edge in self.edges:
            a, b = edge
            for h in edge:
                if h.vertex not in names:
                    return ValidationReport(False, "unknown_vertex", f"edge {a} {b} uses undeclared vertex {h.vertex!r}", h)
                if not 0 <= h.slot < SLOTS:
                    return ValidationReport(False, "bad_slot", f"slot {h.slot} at {h.vertex!r} is not in 0..3", h)
            if a == b:
                return ValidationReport(False, "self_paired", f"edge pairs {a} with itself", a)
            for h in edge:
                if h in used:
                    return ValidationReport(False, "duplicate_slot", f"slot {h} used by two edges", h)
                used[h] = edge
        for name in self.vertices:
            free = [HalfEdge(name, s) for s in range(SLOTS) if HalfEdge(name, s) not in used]
            if free:
                listed = ", ".join(str(h) for h in free)
                return ValidationReport(False, "unused_slot", f"unused slots {listed}", free[0])
        return ValidationReport(True)

    def require_valid(self) -> None:
        report = self.check()
        if not report.ok:
            raise InputError(report.message, location=report.location)

    # -- indexing -------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.vertices)}

    def half_edge_id(self, half_edge: HalfEdge) -> int:
        """Integer id ``4 * vertex_index + slot``."""
        try:
            return SLOTS * self.index[half_edge.vertex] + half_edge.slot
        except KeyError:
            raise InputError(f"unknown vertex {half_edge.vertex!r}", location=half_edge) from None

    def half_edge(self, h: int) -> HalfEdge:
        return HalfEdge(self.vertices[h // SLOTS], h % SLOTS)

    def vertex_of(self, h: int) -> str:
        return self.vertices[h // SLOTS]

    @cached_property
    def partner_table(self) -> Tuple[int, ...]:
        """``partner_table[h]`` is the other end of the edge at half-edge ``h``."""
        self.require_valid()
        table = [0] * (SLOTS * self.n)
        for a, b in self.edges:
            ha, hb = self.half_edge_id(a), self.half_edge_id(b)
            table[ha], table[hb] = hb, ha
        return tuple(table)

    def partner(self, half_edge: HalfEdge) -> HalfEdge:
        return self.half_edge(self.partner_table[self.half_edge_id(half_edge)])

    def edge_at(self, half_edge: HalfEdge) -> Edge:
        """The edge containing ``half_edge``."""
        for edge in self.edges:
            if half_edge in edge:
                return edge
        raise InputError(f"no edge at {half_edge}", location=half_edge)

    # -- structure ------------------------------------------------------------

    def to_networkx(self) -> nx.MultiGraph:
        """Underlying multigraph; each edge carries its half-edges as ``ends``."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for a, b in self.edges:
            graph.add_edge(a.vertex, b.vertex, ends=(a, b))
        return graph

    @cached_property
    def components(self) -> Tuple[Tuple[str, ...], ...]:
        """Vertex sets of connected components, ordered by lowest vertex index."""
        groups = [
            tuple(sorted(c, key=self.index.__getitem__))
            for c in nx.connected_components(self.to_networkx())
        ]
        return tuple(sorted(groups, key=lambda c: self.index[c[0]]))

    @property
    def component_count(self) -> int:
        return len(self.components)

    def subgraph(self, names: Iterable[str]) -> "FourRegularGraph":
        """Vertices ``names`` (in declaration order) and the edges among them."""
        keep = set(names)
        return FourRegularGraph(
            tuple(v for v in self.vertices if v in keep),
            tuple(e for e in self.edges if e[0].vertex in keep and e[1].vertex in keep),
        )

    def component_graphs(self) -> List["FourRegularGraph"]:
        return [self.subgraph(c) for c in self.components]

    def disjoint_union(self, other: "FourRegularGraph") -> "FourRegularGraph":
        shared = set(self.vertices) & set(other.vertices)
        if shared:
            raise InputError(f"graphs share vertex names {sorted(shared)}")
        return FourRegularGraph(self.vertices + other.vertices, self.edges + other.edges)

    def relabel(self, mapping: Mapping[str, str]) -> "FourRegularGraph":
        rename = lambda h: HalfEdge(mapping.get(h.vertex, h.vertex), h.slot)
        return FourRegularGraph(
            tuple(mapping.get(v, v) for v in self.vertices),
            tuple((rename(a), rename(b)) for a, b in self.edges),
        )

    def replace_edges(self, removed: Iterable[Edge], added: Iterable[Edge]) -> "FourRegularGraph":
        gone = {_normal_edge(e) for e in removed}
        kept = [e for e in self.edges if e not in gone]
        return FourRegularGraph(self.vertices, tuple(kept) + tuple(added))

    def is_isomorphic(self, other: "FourRegularGraph") -> bool:
        """Isomorphism of the underlying multigraphs (slots ignored)."""
        return nx.is_isomorphic(self.to_networkx(), other.to_networkx())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "edges": [[str(a), str(b)] for a, b in self.edges],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "FourRegularGraph":
        return cls.from_pairs(data["vertices"], [tuple(e) for e in data["edges"]])


