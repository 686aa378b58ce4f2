"""Planarity of 4-regular graphs through interlacement orbits."""

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from ...config import get_config
from ...infrastructure.logging import get_logger
from ..entities import EulerSystem, FourRegularGraph, LabelKind, Transversal
from ..exceptions import InputError
from . import tracing
from .reduction import require_transversal_budget

logger = get_logger("planarity")


class PlanarityAnswer(Enum):
    YES = "yes"
    NO = "no"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class PlanarityResult:
    """
    Outcome of the orbit search.

    Attributes:
        answer: yes, no or budget_exceeded
        explored: Distinct interlacement graphs visited
        witness: Euler system with bipartite interlacement when the answer is yes
    """

    answer: PlanarityAnswer
    explored: int
    witness: Optional[EulerSystem] = None

    @property
    def is_planar(self) -> Optional[bool]:
        if self.answer is PlanarityAnswer.BUDGET_EXCEEDED:
            return None
        return self.answer is PlanarityAnswer.YES

    def to_dict(self) -> Dict[str, Any]:
        return {
            "answer": self.answer.value,
            "explored": self.explored,
            "witness": self.witness.transversal.digits if self.witness else None,
        }


def _search_component(
    g: FourRegularGraph, cap: int, exact_limit: int
) -> Tuple[Optional[bool], int, Optional[EulerSystem]]:
    start = tracing.euler_system(g)
    graph = tracing.interlacement(start)
    if graph.is_bipartite():
        return True, 1, start
    seen = {graph.canonical_key(exact_limit)}
    queue = deque([(graph, start)])
    while queue:
        current, euler = queue.popleft()
        for v in g.vertices:
            if not current.neighbors(v):
                continue
            nxt = current.local_complement(v)
            key = nxt.canonical_key(exact_limit)
            if key in seen:
                continue
            seen.add(key)
            nxt_euler = tracing.kappa_transform(euler, v)
            if nxt.is_bipartite():
                return True, len(seen), nxt_euler
            if len(seen) >= cap:
                return None, len(seen), None
            queue.append((nxt, nxt_euler))
    return False, len(seen), None


def is_planar(
    g: FourRegularGraph,
    cap: Optional[int] = None,
    exact_limit: Optional[int] = None,
) -> PlanarityResult:
    """
    Decide planarity by looking for an Euler system with bipartite interlacement.

    Each component's local complementation orbit is explored breadth first
    from the interlacement of ``euler_system``, deduplicated by canonical key.

    Args:
        g: A valid 4-regular graph
        cap: Most distinct interlacement graphs explored per component
        exact_limit: Canonical-key search bound (see SimpleGraph.canonical_key)
    """
    cfg = get_config().planarity
    cap = cap if cap is not None else cfg.state_cap
    exact_limit = exact_limit if exact_limit is not None else cfg.exact_canonical_limit
    g.require_valid()

    explored = 0
    pairings = dict.fromkeys(g.vertices, 0)
    for part in g.component_graphs():
        found, count, witness = _search_component(part, cap, exact_limit)
        explored += count
        if found is None:
            logger.budget_exceeded("planarity orbit search", count, cap)
            return PlanarityResult(PlanarityAnswer.BUDGET_EXCEEDED, explored)
        if not found:
            logger.debug(f"orbit of {count} graphs has no bipartite member")
            return PlanarityResult(PlanarityAnswer.NO, explored)
        pairings.update(witness.transversal.as_dict())
    t = Transversal.from_transitions(g.vertices, pairings)
    return PlanarityResult(PlanarityAnswer.YES, explored, tracing.euler_system_from_transversal(g, t))


def find_dual_pair(
    g: FourRegularGraph, max_vertices: Optional[int] = None
) -> Optional[Tuple[Transversal, Transversal]]:
    """
    Scan disjoint transversal pairs for |P1| + |P2| = n + 2c(F).

    Such a pair exists exactly when ``g`` is planar.
    """
    require_transversal_budget("dual pair scan", g.n, max_vertices)
    sizes = tracing.partition_sizes(g, max_vertices=max_vertices)
    target = g.n + 2 * g.component_count
    powers = [3 ** (g.n - 1 - i) for i in range(g.n)]
    for k1, size1 in enumerate(sizes):
        t1 = Transversal.from_index(g.vertices, k1)
        for choice in range(1 << g.n):
            k2 = 0
            for i, p in enumerate(t1.pairings):
                step = 1 + ((choice >> i) & 1)
                k2 += ((p + step) % 3) * powers[i]
            if size1 + sizes[k2] == target:
                return t1, Transversal.from_index(g.vertices, k2)
    return None


def dual_pair_witness(c: EulerSystem) -> Tuple[Transversal, Transversal]:
    """
    A dual pair from an Euler system with bipartite interlacement.

    With colour classes V1, V2, P1 follows φ on V1 and χ elsewhere, P2 follows
    φ on V2 and χ elsewhere.
    """
    h = tracing.interlacement(c)
    classes = h.bipartition()
    if classes is None:
        raise InputError("interlacement graph is not bipartite")
    left = set(classes[0])
    labels = tracing.label_pairings(c)
    vertices = c.graph.vertices
    first = [labels[v][LabelKind.PHI if v in left else LabelKind.CHI] for v in vertices]
    second = [labels[v][LabelKind.CHI if v in left else LabelKind.PHI] for v in vertices]
    return Transversal(vertices, tuple(first)), Transversal(vertices, tuple(second))


def planarity_agrees(g: FourRegularGraph, cap: Optional[int] = None) -> bool:
    """True when the orbit search and the dual pair scan give the same answer."""
    result = is_planar(g, cap=cap)
    if result.is_planar is None:
        return True
    return result.is_planar == (find_dual_pair(g) is not None)
