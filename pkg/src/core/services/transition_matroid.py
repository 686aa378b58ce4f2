"""
The transition matroid of a 4-regular graph and the touch-graph dualities.

Ground elements are ``TransitionGroundLabel`` values. Two labels are equal
when they name the same slot pairing at the same vertex, so matroids built
from different Euler systems of one graph share a ground set.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence

import networkx as nx

from ...config import get_config
from ...infrastructure.logging import get_logger
from ..algebra import BinaryMatroid, BitMatrix
from ..algebra.matroid import cycle_matroid
from ..entities import (
    EulerSystem,
    FourRegularGraph,
    LabelKind,
    SimpleGraph,
    TransitionGroundLabel,
    Transversal,
)
from ..exceptions import ConsistencyError, InputError
from . import moves, tracing
from .reduction import ReductionPlan, reduce_range, require_transversal_budget, require_within

logger = get_logger("matroid")

KIND_ORDER = (LabelKind.PHI, LabelKind.CHI, LabelKind.PSI)

VertexLabels = Dict[str, Dict[LabelKind, int]]


def transition_matroid(c: EulerSystem) -> BinaryMatroid:
    """
    The matroid represented by ``(I | A | I + A)``.

    ``A`` is the adjacency matrix of the interlacement graph of ``c``. The
    three column blocks are the φ, χ and ψ transitions, each in vertex order.

    Args:
        c: Any Euler system of the graph

    Returns:
        Rank-n binary matroid on all 3n transitions
    """
    g = c.graph
    n = g.n
    adjacency = tracing.interlacement(c).rows
    rows = [(1 << i) | (a << n) | ((a ^ (1 << i)) << (2 * n)) for i, a in enumerate(adjacency)]
    labels = tracing.label_pairings(c)
    ground = tuple(
        TransitionGroundLabel(v, labels[v][kind], kind) for kind in KIND_ORDER for v in g.vertices
    )
    return BinaryMatroid(ground, BitMatrix.from_row_masks(rows, 3 * n))


def graph_matroid(g: FourRegularGraph) -> BinaryMatroid:
    """Transition matroid built from the default Euler system."""
    return transition_matroid(tracing.euler_system(g))


def transversal_labels(t: Transversal) -> List[TransitionGroundLabel]:
    return [TransitionGroundLabel(v, p) for v, p in zip(t.vertices, t.pairings)]


def rank_of_transversal(m: BinaryMatroid, t: Transversal) -> int:
    """r(τ(P)) for the partition induced by ``t``."""
    return m.rank(transversal_labels(t))


def transversal_ranks(
    g: FourRegularGraph,
    m: Optional[BinaryMatroid] = None,
    workers: Optional[int] = None,
    max_vertices: Optional[int] = None,
) -> List[int]:
    """r(τ(P)) for all 3^n transversals, in transversal index order."""
    require_transversal_budget("transversal ranks", g.n, max_vertices)
    m = m or graph_matroid(g)
    column = [[m.index_of(TransitionGroundLabel(v, p)) for p in range(3)] for v in g.vertices]

    def work(start: int, stop: int) -> List[int]:
        out = []
        for k in range(start, stop):
            mask = 0
            for i, p in enumerate(Transversal.from_index(g.vertices, k).pairings):
                mask |= 1 << column[i][p]
            out.append(m.rank_mask(mask))
        return out

    plan = ReductionPlan.from_config(3 ** g.n, workers=workers)
    return reduce_range("transversal ranks", plan, work, lambda a, b: a + b, [])


def circuit_nullity_holds(g: FourRegularGraph, t: Transversal, m: Optional[BinaryMatroid] = None) -> bool:
    """|P| = n + c(F) - r(τ(P))."""
    m = m or graph_matroid(g)
    return tracing.circuit_count(g, t) == g.n + g.component_count - rank_of_transversal(m, t)


def detach_minor(m: BinaryMatroid, vertex: str, pairing: int) -> BinaryMatroid:
    """
    Contract the kept transition at ``vertex`` and delete the other two.

    The result is the transition matroid of the detachment along that
    transition, with ground elements matched by slot pairing.
    """
    if pairing not in range(3):
        raise InputError(f"pairing must be 0, 1 or 2, got {pairing}")
    kept = TransitionGroundLabel(vertex, pairing)
    others = [TransitionGroundLabel(vertex, p) for p in range(3) if p != pairing]
    return m.contract(kept).delete(others)


def cycle_matroid_of(graph: nx.MultiGraph) -> BinaryMatroid:
    """Cycle matroid of a networkx multigraph; an edge's ``label`` (or key) names it."""
    edges = [(data.get("label", key), u, v) for u, v, key, data in graph.edges(keys=True, data=True)]
    return cycle_matroid(list(graph.nodes), edges)


def touch_matroid(g: FourRegularGraph, t: Transversal) -> BinaryMatroid:
    """Cycle matroid of the touch-graph of the partition of ``t``, on V(F)."""
    return cycle_matroid_of(tracing.touch_graph(tracing.trace_partition(g, t)).to_networkx())


def _on_vertices(m: BinaryMatroid) -> BinaryMatroid:
    return m.relabel({label: label.vertex for label in m.ground})


def restricted_matroid(m: BinaryMatroid, t: Transversal) -> BinaryMatroid:
    """M_τ(P) with its elements renamed to the vertices of the graph."""
    return _on_vertices(m.restrict(transversal_labels(t)))


def verify_touch_duality(
    g: FourRegularGraph,
    t: Transversal,
    m: Optional[BinaryMatroid] = None,
    limit: Optional[int] = None,
) -> bool:
    """True when Tch(P) and the dual of M_τ(P) have the same rank function on V(F)."""
    limit = limit if limit is not None else get_config().matroid.exhaustive_limit
    m = m or graph_matroid(g)
    dual = restricted_matroid(m, t).dual()
    return dual.same_rank_function(touch_matroid(g, t), limit=limit)


def is_direct_sum(
    m: BinaryMatroid,
    first: Sequence[Any],
    second: Sequence[Any],
    limit: Optional[int] = None,
) -> bool:
    """
    True when the restriction to ``first + second`` is the direct sum of the two parts.

    Checked as r(X) = r(X ∩ first) + r(X ∩ second) over every subset X.
    """
    limit = limit if limit is not None else get_config().matroid.exhaustive_limit
    if set(first) & set(second):
        raise InputError("direct sum parts must be disjoint")
    part = m.restrict(list(first) + list(second))
    require_within("direct sum check", part.size, limit)
    left = part.mask_of(first)
    right = part.mask_of(second)
    return all(
        part.rank_mask(x) == part.rank_mask(x & left) + part.rank_mask(x & right)
        for x in range(1 << part.size)
    )


@dataclass(frozen=True)
class DualPairReport:
    """
    Ranks of two disjoint transversals.

    Attributes:
        r1: r(τ(P1))
        r2: r(τ(P2))
        union_rank: r(τ(P1) ∪ τ(P2)), always n
        is_dual_pair: r1 + r2 = n
        verified: The restriction duality and direct-sum checks were run
    """

    r1: int
    r2: int
    union_rank: int
    is_dual_pair: bool
    verified: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r1": self.r1,
            "r2": self.r2,
            "union_rank": self.union_rank,
            "is_dual_pair": self.is_dual_pair,
            "verified": self.verified,
        }


def _inconsistent(what: str, detail: str) -> ConsistencyError:
    logger.consistency_failure(what, detail)
    return ConsistencyError(f"{what}: {detail}")


def _require_disjoint(g: FourRegularGraph, t1: Transversal, t2: Transversal) -> None:
    for t in (t1, t2):
        if t.vertices != g.vertices:
            raise InputError("transversal vertices do not match the graph's vertex order")
    for v, a, b in zip(g.vertices, t1.pairings, t2.pairings):
        if a == b:
            raise InputError(f"transversals agree at {v!r}", location=v)


def check_dual_pair(
    g: FourRegularGraph,
    t1: Transversal,
    t2: Transversal,
    m: Optional[BinaryMatroid] = None,
    limit: Optional[int] = None,
) -> DualPairReport:
    """
    Decide whether two disjoint transversals form a dual pair.

    For a dual pair small enough to enumerate, M_τ(P2) is checked to be the
    dual of M_τ(P1) on V(F) and τ(P1) ∪ τ(P2) to split as a direct sum.

    Raises:
        InputError: If the transversals agree at some vertex
        ConsistencyError: If any of the equivalent characterizations disagree
    """
    _require_disjoint(g, t1, t2)
    limit = limit if limit is not None else get_config().matroid.exhaustive_limit
    m = m or graph_matroid(g)
    first, second = transversal_labels(t1), transversal_labels(t2)
    r1, r2 = m.rank(first), m.rank(second)
    union_rank = m.rank(first + second)
    n, c = g.n, g.component_count
    if union_rank != n:
        raise _inconsistent("dual pair", f"union of disjoint transversals has rank {union_rank}, not {n}")

    is_dual = r1 + r2 == n
    sizes = tracing.circuit_count(g, t1) + tracing.circuit_count(g, t2)
    if is_dual != (sizes == n + 2 * c):
        raise _inconsistent("dual pair", f"ranks {r1}+{r2} disagree with circuit counts totalling {sizes}")

    verified = False
    if is_dual and 2 * n <= limit:
        dual = restricted_matroid(m, t1).dual()
        if not dual.same_rank_function(restricted_matroid(m, t2), limit=limit):
            raise _inconsistent("dual pair", "restrictions are not dual matroids on the vertex set")
        if not is_direct_sum(m, first, second, limit=limit):
            raise _inconsistent("dual pair", "union of the transversals is not a direct sum")
        verified = True
    logger.debug(f"dual pair check r1={r1} r2={r2} dual={is_dual}")
    return DualPairReport(r1, r2, union_rank, is_dual, verified)


def weak_map_holds(
    g: FourRegularGraph,
    t1: Transversal,
    t2: Transversal,
    subset: Iterable[str],
    m: Optional[BinaryMatroid] = None,
) -> bool:
    """
    If τ2(A) is dependent in M_τ(P2), τ1(A) must be dependent in M_τ(P1)*.

    Returns:
        False only when ``subset`` is a counterexample
    """
    _require_disjoint(g, t1, t2)
    subset = list(dict.fromkeys(subset))
    m = m or graph_matroid(g)
    second = restricted_matroid(m, t2)
    if second.rank(subset) == len(subset):
        return True
    return restricted_matroid(m, t1).dual().rank(subset) < len(subset)


def switched_transversal(t1: Transversal, t2: Transversal, subset: Iterable[str]) -> Transversal:
    """``t2`` on ``subset`` and ``t1`` everywhere else."""
    chosen = set(subset)
    return Transversal(
        t1.vertices,
        tuple(b if v in chosen else a for v, a, b in zip(t1.vertices, t1.pairings, t2.pairings)),
    )


def las_vergnas_martin_check(
    g: FourRegularGraph,
    t1: Transversal,
    t2: Transversal,
    m: Optional[BinaryMatroid] = None,
    limit: Optional[int] = None,
) -> bool:
    """
    Check the touch-graph formula for every switching set of a dual pair.

    For A ⊆ V(F) let P_A follow ``t2`` on A and ``t1`` elsewhere. With r_T
    the rank function of the cycle matroid of Tch(P1),
    |P_A| - c(F) = r_T(V) + |A| - 2 r_T(A).

    Raises:
        InputError: If ``t1, t2`` are not a dual pair
    """
    limit = limit if limit is not None else get_config().matroid.exhaustive_limit
    if not check_dual_pair(g, t1, t2, m=m, limit=limit).is_dual_pair:
        raise InputError("transversals are not a dual pair")
    require_within("Las Vergnas-Martin check", g.n, limit)
    touch = touch_matroid(g, t1)
    total = touch.rank()
    c = g.component_count
    for mask in range(1 << g.n):
        subset = [v for i, v in enumerate(g.vertices) if (mask >> i) & 1]
        size = tracing.circuit_count(g, switched_transversal(t1, t2, subset))
        if size - c != total + len(subset) - 2 * touch.rank(subset):
            logger.debug(f"touch-graph formula fails on {subset}")
            return False
    return True


def relabel_after_kappa(labels: VertexLabels, h: SimpleGraph, v: str) -> VertexLabels:
    """
    Labels relative to C∗v from those relative to C.

    φ and ψ swap at ``v``; χ and ψ swap at every neighbour of ``v`` in the
    interlacement graph ``h`` of C.
    """
    if v not in labels:
        raise InputError(f"unknown vertex {v!r}", location=v)
    swap_at = {v: (LabelKind.PHI, LabelKind.PSI)}
    for w in h.neighbors(v):
        swap_at[w] = (LabelKind.CHI, LabelKind.PSI)
    out = {}
    for w, kinds in labels.items():
        new = dict(kinds)
        if w in swap_at:
            a, b = swap_at[w]
            new[a], new[b] = kinds[b], kinds[a]
        out[w] = new
    return out


def same_transition_matroid(
    g1: FourRegularGraph,
    g2: FourRegularGraph,
    bijection: Optional[moves.TransitionBijection] = None,
    limit: Optional[int] = None,
) -> bool:
    """
    Compare transition matroids of two graphs on the same vertex set.

    Transitions are matched by ``bijection``, by default the one a move
    induces: same vertex, same slot pairing.
    """
    bijection = bijection if bijection is not None else moves.transition_bijection(g1, g2)
    limit = limit if limit is not None else get_config().matroid.exhaustive_limit
    return graph_matroid(g1).same_rank_function(graph_matroid(g2), bijection=bijection, limit=limit)
