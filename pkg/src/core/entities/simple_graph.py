"""Simple graphs held as GF(2) adjacency rows (interlacement graphs)."""

import itertools
import math
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..algebra.gf2 import BitMatrix
from ..exceptions import InputError


@dataclass(frozen=True)
class SimpleGraph:
    """
    A loop-free simple graph.

    Attributes:
        vertices: Vertex names; vertex i owns bit i of every row
        rows: Adjacency rows as integer bit masks
    """

    vertices: Tuple[str, ...]
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "rows", tuple(self.rows))
        n = len(self.vertices)
        if len(self.rows) != n:
            raise InputError(f"{len(self.rows)} adjacency rows for {n} vertices")
        for i, row in enumerate(self.rows):
            if (row >> i) & 1:
                raise InputError(f"adjacency has a loop at {self.vertices[i]!r}")
            if row >> n:
                raise InputError(f"row {i} has bits beyond vertex {n - 1}")
            for j in range(n):
                if ((row >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise InputError(f"adjacency is not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, vertices: Sequence[str], edges: Iterable[Tuple[str, str]]) -> "SimpleGraph":
        position = {v: i for i, v in enumerate(vertices)}
        rows = [0] * len(position)
        for a, b in edges:
            i, j = position[a], position[b]
            if i == j:
                raise InputError(f"loop at {a!r} in a simple graph")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(tuple(vertices), tuple(rows))

    @classmethod
    def edgeless(cls, vertices: Sequence[str]) -> "SimpleGraph":
        return cls(tuple(vertices), (0,) * len(vertices))

    @classmethod
    def complete(cls, vertices: Sequence[str]) -> "SimpleGraph":
        full = (1 << len(vertices)) - 1
        return cls(tuple(vertices), tuple(full ^ (1 << i) for i in range(len(vertices))))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index_of(self, vertex: str) -> int:
        try:
            return self.vertices.index(vertex)
        except ValueError:
            raise InputError(f"unknown vertex {vertex!r}", location=vertex) from None

    def has_edge(self, a: str, b: str) -> bool:
        return bool((self.rows[self.index_of(a)] >> self.index_of(b)) & 1)

    def neighbors(self, vertex: str) -> List[str]:
        row = self.rows[self.index_of(vertex)]
        return [w for j, w in enumerate(self.vertices) if (row >> j) & 1]

    def edges(self) -> List[Tuple[str, str]]:
        return [
            (self.vertices[i], self.vertices[j])
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if (self.rows[i] >> j) & 1
        ]

    @property
    def matrix(self) -> BitMatrix:
        return BitMatrix.from_row_masks(self.rows, self.n, labels=self.vertices)

    def local_complement(self, vertex: str) -> "SimpleGraph":
        """Toggle adjacency between every pair of neighbours of ``vertex``."""
        v = self.index_of(vertex)
        hood = self.rows[v]
        rows = list(self.rows)
        for u in range(self.n):
            if (hood >> u) & 1:
                rows[u] ^= hood & ~(1 << u)
        return SimpleGraph(self.vertices, tuple(rows))

    def induced(self, subset: Iterable[str]) -> "SimpleGraph":
        wanted = set(subset)
        keep = [i for i, v in enumerate(self.vertices) if v in wanted]
        rows = []
        for i in keep:
            row = 0
            for k, j in enumerate(keep):
                if (self.rows[i] >> j) & 1:
                    row |= 1 << k
            rows.append(row)
        return SimpleGraph(tuple(self.vertices[i] for i in keep), tuple(rows))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges())
        return graph

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def bipartition(self) -> Optional[Tuple[List[str], List[str]]]:
        """Two colour classes (in vertex order) or None if an odd cycle exists."""
        graph = self.to_networkx()
        if not nx.is_bipartite(graph):
            return None
        colour: Dict[str, int] = {}
        for component in nx.connected_components(graph):
            first = min(component, key=self.vertices.index)
            colour.update(nx.bipartite.color(graph.subgraph(component)))
            if colour[first]:
                for v in component:
                    colour[v] ^= 1
        left = [v for v in self.vertices if colour[v] == 0]
        right = [v for v in self.vertices if colour[v] == 1]
        return left, right

    def components(self) -> List[List[str]]:
        groups = [sorted(c, key=self.vertices.index) for c in nx.connected_components(self.to_networkx())]
        return sorted(groups, key=lambda c: self.vertices.index(c[0]))

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1

    def is_isomorphic(self, other: "SimpleGraph") -> bool:
        return nx.is_isomorphic(self.to_networkx(), other.to_networkx())

    def canonical_key(self, exact_limit: int = 8) -> Tuple[Any, ...]:
        """
        Isomorphism-invariant key for orbit deduplication.

        Vertices are grouped by Weisfeiler-Lehman colour; the minimum adjacency
        string over orderings that respect the colour order is taken when the
        number of such orderings is at most ``exact_limit!``. Otherwise the key
        is the labelled adjacency, which still never merges non-isomorphic graphs.
        """
        if self.n == 0:
            return ("canonical", ())
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((self.vertices.index(a), self.vertices.index(b)) for a, b in self.edges())
        hashes = nx.weisfeiler_lehman_subgraph_hashes(graph, iterations=max(1, self.n))
        colour = {v: hashes[v][-1] for v in range(self.n)}
        classes: Dict[str, List[int]] = {}
        for v in range(self.n):
            classes.setdefault(colour[v], []).append(v)
        ordered = [classes[c] for c in sorted(classes)]
        orderings = math.prod(math.factorial(len(c)) for c in ordered)
        if orderings > math.factorial(exact_limit):
            return ("labelled", self.vertices, self.rows)
        best: Optional[Tuple[int, ...]] = None
        for parts in itertools.product(*(itertools.permutations(c) for c in ordered)):
            order = [v for part in parts for v in part]
            key = tuple(
                sum(1 << k for k, u in enumerate(order) if (self.rows[v] >> u) & 1)
                for v in order
            )
            if best is None or key < best:
                best = key
        return ("canonical", tuple(len(c) for c in ordered), tuple(sorted(classes)), best)

    def to_dict(self) -> Dict[str, Any]:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges()]}
