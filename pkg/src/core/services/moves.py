"""Structural moves: detachment, connected sum, separation, balanced mutation."""

from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx

from ...infrastructure.logging import get_logger
from ..entities import Edge, FourRegularGraph, HalfEdge, Transition, TransitionGroundLabel, mate
from ..exceptions import InputError

logger = get_logger("moves")

EdgePair = Tuple[Edge, Edge]
Reattachment = Union[str, Sequence[Edge]]
TransitionBijection = Dict[TransitionGroundLabel, TransitionGroundLabel]


def detachment_with_arcs(g: FourRegularGraph, t: Transition) -> Tuple[FourRegularGraph, int]:
    """
    Remove ``t.vertex`` and splice its half-edges along ``t``.

    Returns:
        (detached graph, number of closed vertex-free arcs discarded)
    """
    g.require_valid()
    v, pairing = t.vertex, t.pairing
    if v not in g.index:
        raise InputError(f"unknown vertex {v!r}", location=v)
    visited: Set[int] = set()

    def walk(slot: int) -> Optional[HalfEdge]:
        visited.add(slot)
        h = g.partner(HalfEdge(v, slot))
        while h.vertex == v:
            visited.add(h.slot)
            nxt = mate(h.slot, pairing)
            visited.add(nxt)
            if nxt == slot:
                return None
            h = g.partner(HalfEdge(v, nxt))
        return h

    added: List[Edge] = []
    discarded = 0
    for slot in range(4):
        if slot in visited:
            continue
        end_a = walk(slot)
        if end_a is None:
            discarded += 1
            continue
        end_b = walk(mate(slot, pairing))
        if end_b is None:
            raise InputError(f"inconsistent splice at {v!r}")
        added.append((end_a, end_b))

    kept = tuple(e for e in g.edges if e[0].vertex != v and e[1].vertex != v)
    remaining = tuple(name for name in g.vertices if name != v)
    return FourRegularGraph(remaining, kept + tuple(added)), discarded


def detachment(g: FourRegularGraph, t: Transition) -> FourRegularGraph:
    """Detach (split) ``t.vertex`` along the transition ``t``; free loops are dropped."""
    return detachment_with_arcs(g, t)[0]


def transition_bijection(source: FourRegularGraph, target: FourRegularGraph) -> TransitionBijection:
    """
    Match the transitions of ``source`` with those of ``target``.

    Connected sum, separation and balanced mutation keep every vertex and
    its four slots and only rewire edges, so a transition corresponds to
    the one pairing the same slots at the same vertex. For a connected sum
    the source is the disjoint union of the two summands.

    Raises:
        InputError: If the graphs have different vertex sets
    """
    if set(source.vertices) != set(target.vertices):
        missing = sorted(set(source.vertices) ^ set(target.vertices))
        raise InputError(f"graphs have different vertex sets, unmatched {missing}")
    return {
        TransitionGroundLabel(v, p): TransitionGroundLabel(v, p)
        for v in source.vertices
        for p in range(3)
    }


def _require_edge(g: FourRegularGraph, edge: Edge) -> None:
    a, b = edge
    if (min(a, b), max(a, b)) not in set(g.edges):
        raise InputError(f"edge {a} {b} not found", location=a)


def connected_sum(
    g1: FourRegularGraph,
    e1: Edge,
    g2: FourRegularGraph,
    e2: Edge,
    matching: int = 0,
) -> FourRegularGraph:
    """
    Join two graphs by cutting an edge in each and cross-connecting the ends.

    With ``e1 = (h1, h1')`` and ``e2 = (h2, h2')``, matching 0 adds
    ``{h1, h2}`` and ``{h1', h2'}``; matching 1 adds ``{h1, h2'}`` and ``{h1', h2}``.
    """
    if matching not in (0, 1):
        raise InputError(f"matching must be 0 or 1, got {matching}")
    _require_edge(g1, e1)
    _require_edge(g2, e2)
    union = g1.disjoint_union(g2)
    (h1, h1b), (h2, h2b) = e1, e2
    if matching == 0:
        added = [(h1, h2), (h1b, h2b)]
    else:
        added = [(h1, h2b), (h1b, h2)]
    return union.replace_edges([e1, e2], added)


def separation(g: FourRegularGraph, e1: Edge, e2: Edge) -> FourRegularGraph:
    """
    Undo a connected sum across the 2-edge cut ``{e1, e2}``.

    Raises:
        InputError: If the two edges do not form a 2-edge cut
    """
    g.require_valid()
    _require_edge(g, e1)
    _require_edge(g, e2)
    (a1, b1), (a2, b2) = e1, e2
    if {a1, b1} == {a2, b2}:
        raise InputError("separation needs two different edges")
    target = g.component_count + 1
    for added in ([(a1, a2), (b1, b2)], [(a1, b2), (b1, a2)]):
        candidate = g.replace_edges([e1, e2], added)
        if candidate.component_count == target:
            return candidate
    raise InputError(f"edges {a1} {b1} and {a2} {b2} are not a 2-edge cut", location=a1)


def _cut_sides(g: FourRegularGraph, cut: Sequence[Edge]) -> Dict[str, int]:
    """Side (0 or 1) of every vertex touched by the cut components."""
    rest = g.replace_edges(cut, []).to_networkx()
    component_of: Dict[str, int] = {}
    for i, component in enumerate(nx.connected_components(rest)):
        for v in component:
            component_of[v] = i
    quotient = nx.Graph()
    for a, b in cut:
        ca, cb = component_of[a.vertex], component_of[b.vertex]
        if ca == cb:
            raise InputError(f"cut edge {a} {b} does not cross between two sides", location=a)
        quotient.add_edge(ca, cb)
    if not nx.is_bipartite(quotient):
        raise InputError("the four edges do not form an edge cut between two vertex sets")
    side_of_component: Dict[int, int] = {}
    for piece in sorted(nx.connected_components(quotient), key=min):
        side_of_component.update(nx.bipartite.color(quotient.subgraph(piece)))
        root = min(piece)
        if side_of_component[root]:
            for c in piece:
                side_of_component[c] ^= 1
    return {v: side_of_component[c] for v, c in component_of.items() if c in side_of_component}


def balanced_mutation(
    g: FourRegularGraph,
    pairs: Tuple[EdgePair, EdgePair],
    reattachment: Reattachment = "swap",
) -> FourRegularGraph:
    """
    Rejoin a 4-edge cut pair by pair.

    Every cut edge is written ``(x, y)`` with ``x`` on the first side.
    ``"swap"`` replaces each pair ``(x1, y1), (x2, y2)`` with ``{x1, y2}`` and
    ``{x2, y1}``; ``"identity"`` keeps the graph. An explicit list of four
    new edges must join each pair's ends across the cut and must either
    reassemble both pairs or neither.

    Raises:
        InputError: If the edges are not an edge cut or a new edge fails to cross
    """
    g.require_valid()
    (e1, e2), (e3, e4) = pairs
    cut = [e1, e2, e3, e4]
    for e in cut:
        _require_edge(g, e)
    if len({frozenset(e) for e in cut}) != 4:
        raise InputError("balanced mutation needs four distinct edges")
    side = _cut_sides(g, cut)

    def oriented(edge: Edge) -> Tuple[HalfEdge, HalfEdge]:
        a, b = edge
        return (a, b) if side[a.vertex] == 0 else (b, a)

    groups = [[oriented(e1), oriented(e2)], [oriented(e3), oriented(e4)]]

    if isinstance(reattachment, str):
        if reattachment == "identity":
            return g
        if reattachment != "swap":
            raise InputError(f"unknown reattachment {reattachment!r}")
        added = []
        for (x1, y1), (x2, y2) in groups:
            added += [(x1, y2), (x2, y1)]
        logger.debug("balanced mutation swaps both pairs")
        return g.replace_edges(cut, added)

    added = [tuple(e) for e in reattachment]
    if len(added) != 4:
        raise InputError(f"reattachment needs 4 edges, got {len(added)}")
    swapped = []
    used: Set[HalfEdge] = set()
    for (x1, y1), (x2, y2) in groups:
        ends = {x1, y1, x2, y2}
        mine = [e for e in added if set(e) <= ends]
        if len(mine) != 2:
            raise InputError("each new edge must join two ends of the same pair")
        for a, b in mine:
            if a in used or b in used:
                raise InputError(f"half-edge reused in reattachment at {a} {b}", location=a)
            used.update((a, b))
            if side[a.vertex] == side[b.vertex]:
                raise InputError(f"new edge {a} {b} does not cross the cut", location=a)
        swapped.append({frozenset(e) for e in mine} == {frozenset((x1, y2)), frozenset((x2, y1))})
    if swapped[0] != swapped[1]:
        raise InputError("reattachment must reassemble both pairs or neither")
    return g.replace_edges(cut, added)
