"""
Ribbon graphs through their medial graphs.

The medial vertex of an edge ``e`` with half-edges ``h = e.first`` and
``h' = e.second`` has four slots, one per band corner: slot 0 comes before
``h`` in the rotation at its vertex, slot 1 after it, slots 2 and 3 likewise
for ``h'``. The δ transition joins the corners of one band end, pairing
{01|23}. The ε transition follows the band sides: {03|12} for an untwisted
band, {02|13} for a twisted one.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ...config import get_config
from ...infrastructure.logging import get_logger
from ..algebra import BinaryMatroid, SparsePoly
from ..algebra.matroid import cycle_matroid
from ..entities import (
    FourRegularGraph,
    HalfEdge,
    RibbonEdge,
    RibbonGraph,
    Transition,
    Transversal,
    mate,
    third_pairing,
)
from ..exceptions import InputError
from . import moves, tracing
from .reduction import ReductionPlan, reduce_range, require_within
from .transition_matroid import graph_matroid, restricted_matroid

logger = get_logger("ribbon")

DELTA = 0
EPSILON_UNTWISTED = 2
EPSILON_TWISTED = 1

Designation = Tuple[int, int, int]
IDENTITY: Designation = (0, 1, 2)
SWAP_DELTA_EPSILON: Designation = (1, 0, 2)
SWAP_EPSILON_OTHER: Designation = (0, 2, 1)


# -- medial construction -----------------------------------------------------------


def _corner_slots(G: RibbonGraph) -> Tuple[Dict[str, int], Dict[str, int]]:
    before: Dict[str, int] = {}
    after: Dict[str, int] = {}
    for e in G.edges:
        before[e.first], after[e.first] = 0, 1
        before[e.second], after[e.second] = 2, 3
    return before, after


def medial(G: RibbonGraph) -> Tuple[FourRegularGraph, Transversal, Transversal]:
    """
    Medial graph with its δ and ε transversals.

    Medial vertices are named after the edges of ``G``, in edge order.
    Isolated vertices of ``G`` leave no trace in the medial.
    """
    before, after = _corner_slots(G)
    edges = []
    for cycle in G.rotation:
        for i, h in enumerate(cycle):
            nxt = cycle[(i + 1) % len(cycle)]
            edges.append((HalfEdge(G.edge_of[h].name, after[h]), HalfEdge(G.edge_of[nxt].name, before[nxt])))
    vertices = tuple(e.name for e in G.edges)
    f = FourRegularGraph(vertices, tuple(edges))
    delta = Transversal.uniform(vertices, DELTA)
    epsilon = Transversal(
        vertices, tuple(EPSILON_UNTWISTED if e.sign == 1 else EPSILON_TWISTED for e in G.edges)
    )
    return f, delta, epsilon


def _fresh_names(count: int, taken: Iterable[str]) -> List[str]:
    taken = set(taken)
    names = []
    i = 0
    while len(names) < count:
        name = f"d{i}"
        if name not in taken:
            names.append(name)
        i += 1
    return names


def from_partitions(
    f: FourRegularGraph,
    delta: Transversal,
    epsilon: Transversal,
    isolated: Sequence[str] = (),
) -> RibbonGraph:
    """
    Rebuild a ribbon graph from two transversals of its medial.

    Every δ-circuit becomes a vertex whose rotation is the order the circuit
    visits band ends. Medial vertex ``e`` becomes edge ``e`` with half-edges
    ``e.a`` (the end holding slot 0) and ``e.b``; it is twisted when ε joins
    the departure corner of ``e.a`` to the departure corner of ``e.b``.

    Args:
        f: A valid 4-regular graph
        delta: Transitions tracing the vertex disks
        epsilon: Transitions tracing the boundary
        isolated: Extra edgeless vertices to carry over

    Raises:
        InputError: If δ and ε coincide at a vertex
    """
    f.require_valid()
    for t in (delta, epsilon):
        if t.vertices != f.vertices:
            raise InputError("transversal vertices do not match the graph's vertex order")
    for v, d, e in zip(f.vertices, delta.pairings, epsilon.pairings):
        if d == e:
            raise InputError(f"δ and ε coincide at {v!r}", location=v)

    p = tracing.trace_partition(f, delta)
    names = _fresh_names(p.size, isolated)
    arrival: Dict[Tuple[str, bool], int] = {}
    departure: Dict[Tuple[str, bool], int] = {}
    rotation = []
    for i, circuit in enumerate(p.circuits):
        cycle = []
        length = len(circuit)
        for j in range(1, length, 2):
            came, left = circuit[j], circuit[(j + 1) % length]
            e = f.vertex_of(came)
            first = 0 in (came & 3, left & 3)
            arrival[(e, first)] = came & 3
            departure[(e, first)] = left & 3
            cycle.append(f"{e}.a" if first else f"{e}.b")
        rotation.append(tuple(cycle))

    edges = []
    for e, pairing in zip(f.vertices, epsilon.pairings):
        untwisted = mate(departure[(e, True)], pairing) == arrival[(e, False)]
        edges.append(RibbonEdge(e, f"{e}.a", f"{e}.b", 1 if untwisted else -1))
    vertices = tuple(names) + tuple(isolated)
    rotation += [()] * len(isolated)
    return RibbonGraph(vertices, tuple(rotation), tuple(edges))


# -- surface invariants -------------------------------------------------------------


def boundary_components(G: RibbonGraph, edges: Optional[Iterable[str]] = None) -> int:
    """
    Boundary curves of the sub-ribbon graph keeping only ``edges`` (all by default).

    Medial vertices of the other edges are detached along δ; ε is traced in
    what remains, and every vertex disk left without bands adds one curve.
    """
    f, delta, epsilon = medial(G)
    keep = set(f.vertices) if edges is None else set(edges)
    unknown = keep - set(f.vertices)
    if unknown:
        raise InputError(f"unknown edges {sorted(unknown)}", location=sorted(unknown)[0])
    graph = f
    bare = len(G.isolated_vertices())
    for e in f.vertices:
        if e not in keep:
            graph, freed = moves.detachment_with_arcs(graph, Transition(e, DELTA))
            bare += freed
    rest = Transversal.from_transitions(graph.vertices, epsilon.as_dict())
    return tracing.circuit_count(graph, rest) + bare


def _constraint_graph(f: FourRegularGraph, delta: Transversal, epsilon: Transversal) -> nx.Graph:
    """Half-edge ids joined when they must point in opposite directions."""
    partner = f.partner_table
    graph = nx.Graph()
    graph.add_nodes_from(range(len(partner)))
    graph.add_edges_from((h, partner[h]) for h in range(len(partner)))
    for i in range(f.n):
        for t in (delta, epsilon):
            p = t.pairings[i]
            for slot in range(4):
                graph.add_edge(4 * i + slot, 4 * i + mate(slot, p))
    return graph


def orientable(G: RibbonGraph) -> bool:
    """True when medial edge directions exist that every δ and ε transition respects."""
    f, delta, epsilon = medial(G)
    return nx.is_bipartite(_constraint_graph(f, delta, epsilon))


def orientable_by_euler_system(G: RibbonGraph) -> bool:
    """Orient an Euler system built from δ and ε transitions only and test every δ and ε."""
    f, delta, epsilon = medial(G)
    if f.n == 0:
        return True
    c = tracing.restricted_euler_system(f, delta, epsilon)
    o = tracing.balanced_orientation(f, c)
    return all(
        o.respects(v, delta.pairings[i]) and o.respects(v, epsilon.pairings[i])
        for i, v in enumerate(f.vertices)
    )


def orientable_by_partitions(G: RibbonGraph, cap: Optional[int] = None) -> bool:
    """
    True when no single δ/ε switch leaves the circuit count unchanged.

    P_A uses δ on A and ε elsewhere; all 2^|E| partitions are traced.
    """
    cap = cap if cap is not None else get_config().matroid.bollobas_riordan_edge_cap
    f, delta, epsilon = medial(G)
    n = f.n
    require_within("orientability sweep", n, cap)
    sizes = []
    for mask in range(1 << n):
        pairings = tuple(
            delta.pairings[i] if (mask >> i) & 1 else epsilon.pairings[i] for i in range(n)
        )
        sizes.append(tracing.circuit_count(f, Transversal(f.vertices, pairings)))
    return all(
        sizes[mask] != sizes[mask ^ (1 << i)]
        for mask in range(1 << n)
        for i in range(n)
        if (mask >> i) & 1
    )


@dataclass(frozen=True)
class SurfaceComponent:
    """
    One connected piece of the closed-up surface.

    Attributes:
        vertices: Ribbon graph vertices in the piece
        edge_count: Bands in the piece
        boundary_count: Boundary curves, each capped by a disk
        euler_characteristic: V − E + F of the closed surface
        orientable: Whether the piece is orientable
    """

    vertices: Tuple[str, ...]
    edge_count: int
    boundary_count: int
    euler_characteristic: int
    orientable: bool

    @property
    def euler_genus(self) -> int:
        return 2 - self.euler_characteristic

    @property
    def genus(self) -> int:
        """Handles when orientable, crosscaps otherwise."""
        return self.euler_genus // 2 if self.orientable else self.euler_genus

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "edges": self.edge_count,
            "boundaries": self.boundary_count,
            "euler_characteristic": self.euler_characteristic,
            "orientable": self.orientable,
            "genus": self.genus,
        }


def component_ribbons(G: RibbonGraph) -> List[RibbonGraph]:
    """The ribbon graphs of the connected components, in vertex order."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(G.vertices)
    graph.add_edges_from((u, v) for _, u, v in G.graph_edges())
    order = {v: i for i, v in enumerate(G.vertices)}
    out = []
    for component in sorted(nx.connected_components(graph), key=lambda c: min(order[v] for v in c)):
        vertices = tuple(v for v in G.vertices if v in component)
        rotation = tuple(G.rotation_at(v) for v in vertices)
        edges = tuple(e for e in G.edges if G.vertex_of[e.first] in component)
        out.append(RibbonGraph(vertices, rotation, edges))
    return out


def _closed_surface(G: RibbonGraph) -> SurfaceComponent:
    f, delta, epsilon = medial(G)
    bare = len(G.isolated_vertices())
    discs = tracing.circuit_count(f, delta) + bare
    boundaries = tracing.circuit_count(f, epsilon) + bare
    chi = discs - f.n + boundaries
    return SurfaceComponent(G.vertices, f.n, boundaries, chi, orientable(G))


def euler_genus(G: RibbonGraph) -> Tuple[int, List[SurfaceComponent]]:
    """Euler characteristic of the closed-up surface and its per-component data."""
    pieces = [_closed_surface(part) for part in component_ribbons(G)]
    return sum(p.euler_characteristic for p in pieces), pieces


@dataclass(frozen=True)
class SurfaceSummary:
    """
    Topology of the surface of a ribbon graph.

    Attributes:
        components: Per-component surface data
        boundary_count: Boundary curves in total
        euler_characteristic: Summed over components after capping
        orientable: Every component orientable
    """

    components: Tuple[SurfaceComponent, ...]
    boundary_count: int
    euler_characteristic: int
    orientable: bool

    @property
    def genus(self) -> Tuple[int, ...]:
        return tuple(c.genus for c in self.components)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "components": [c.to_dict() for c in self.components],
            "boundaries": self.boundary_count,
            "euler_characteristic": self.euler_characteristic,
            "orientable": self.orientable,
        }


def surface_summary(G: RibbonGraph) -> SurfaceSummary:
    chi, pieces = euler_genus(G)
    return SurfaceSummary(
        components=tuple(pieces),
        boundary_count=sum(p.boundary_count for p in pieces),
        euler_characteristic=chi,
        orientable=all(p.orientable for p in pieces),
    )


def medial_profile(G: RibbonGraph) -> Dict[str, Any]:
    """Medial graph with the sizes of its δ and ε partitions."""
    f, delta, epsilon = medial(G)
    return {
        "graph": f.to_dict(),
        "delta": delta.digits,
        "epsilon": epsilon.digits,
        "delta_circuits": tracing.circuit_count(f, delta),
        "epsilon_circuits": tracing.circuit_count(f, epsilon),
    }


# -- twisted duality -----------------------------------------------------------------


def twisted_dual(G: RibbonGraph, designations: Mapping[str, Designation]) -> RibbonGraph:
    """
    Permute the (δ, ε, other) designations at chosen medial vertices.

    ``designations[e] = (i, j, k)`` makes the new δ, ε and other transitions
    at ``e`` the old ones in positions i, j and k. Unlisted edges keep theirs.
    """
    f, delta, epsilon = medial(G)
    new_delta = []
    new_epsilon = []
    for e, d, eps in zip(f.vertices, delta.pairings, epsilon.pairings):
        perm = tuple(designations.get(e, IDENTITY))
        if sorted(perm) != [0, 1, 2]:
            raise InputError(f"designation at {e!r} is not a permutation of (0, 1, 2)", location=e)
        triple = (d, eps, third_pairing(d, eps))
        new_delta.append(triple[perm[0]])
        new_epsilon.append(triple[perm[1]])
    unknown = set(designations) - set(f.vertices)
    if unknown:
        raise InputError(f"unknown edges {sorted(unknown)}", location=sorted(unknown)[0])
    return from_partitions(
        f,
        Transversal(f.vertices, tuple(new_delta)),
        Transversal(f.vertices, tuple(new_epsilon)),
        isolated=G.isolated_vertices(),
    )


def geometric_dual(G: RibbonGraph) -> RibbonGraph:
    return twisted_dual(G, {e.name: SWAP_DELTA_EPSILON for e in G.edges})


def partial_dual(G: RibbonGraph, edges: Iterable[str]) -> RibbonGraph:
    return twisted_dual(G, {e: SWAP_DELTA_EPSILON for e in edges})


def half_twist(G: RibbonGraph, edges: Iterable[str]) -> RibbonGraph:
    return twisted_dual(G, {e: SWAP_EPSILON_OTHER for e in edges})


# -- matroids and polynomials ----------------------------------------------------------


def ribbon_cycle_matroid(G: RibbonGraph) -> BinaryMatroid:
    return cycle_matroid(G.vertices, G.graph_edges())


def cycle_duality_holds(G: RibbonGraph, limit: Optional[int] = None) -> bool:
    """The cycle matroid of G is the dual of the δ restriction of the medial's transition matroid."""
    f, delta, _ = medial(G)
    if f.n == 0:
        return True
    limit = limit if limit is not None else get_config().matroid.exhaustive_limit
    dual = restricted_matroid(graph_matroid(f), delta).dual()
    return dual.same_rank_function(ribbon_cycle_matroid(G), limit=limit)


def bollobas_riordan(
    G: RibbonGraph,
    weights: Optional[Mapping[str, Any]] = None,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> SparsePoly:
    """
    Σ_X (x−1)^{r(E)−r(X)} y^{|X|−r(X)} z^{k(X)−f(X)+|X|−r(X)}.

    r is the cycle-matroid rank, k counts components of (V, X) and f counts
    boundary curves of the sub-ribbon graph on X. With ``weights`` each term
    is also multiplied by the weights of the edges in X.

    Raises:
        BudgetExceeded: Above ``cap`` edges
    """
    cap = cap if cap is not None else get_config().matroid.bollobas_riordan_edge_cap
    names = [e.name for e in G.edges]
    require_within("Bollobás-Riordan subset sum", len(names), cap)
    m = ribbon_cycle_matroid(G)
    full = m.rank()
    vertex_count = len(G.vertices)
    weights = weights or {}

    def work(start: int, stop: int) -> Dict[Tuple[int, int, int], Any]:
        buckets: Dict[Tuple[int, int, int], Any] = {}
        for mask in range(start, stop):
            chosen = [name for i, name in enumerate(names) if (mask >> i) & 1]
            r = m.rank_mask(mask)
            nullity = len(chosen) - r
            components = vertex_count - r
            key = (full - r, nullity, components - boundary_components(G, chosen) + nullity)
            product: Any = 1
            for name in chosen:
                product = product * weights.get(name, 1)
            buckets[key] = buckets[key] + product if key in buckets else product
        return buckets

    def merge(a: Dict, b: Dict) -> Dict:
        out = dict(a)
        for key, value in b.items():
            out[key] = out[key] + value if key in out else value
        return out

    plan = ReductionPlan.from_config(1 << len(names), workers=workers)
    buckets = reduce_range("Bollobás-Riordan subset sum", plan, work, merge, {})
    x1 = SparsePoly.variable("x") - 1
    y = SparsePoly.variable("y")
    z = SparsePoly.variable("z")
    total = SparsePoly.constant(0, ("x", "y", "z"))
    for (corank, nullity, twist), weight in sorted(buckets.items()):
        total = total + weight * x1 ** corank * y ** nullity * z ** twist
    return total
