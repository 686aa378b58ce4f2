"""Knot and link diagrams as 4-regular graphs, and the Kauffman bracket."""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ...config import get_config
from ...infrastructure.logging import get_logger
from ..algebra import SparsePoly
from ..entities import FourRegularGraph, HalfEdge, PlanarDiagramCode, Transversal
from ..exceptions import InputError
from . import tracing
from .reduction import ReductionPlan, reduce_range, require_within
from .transition_matroid import graph_matroid, rank_of_transversal

logger = get_logger("knots")

A_SMOOTHING = 0
CROSSING = 1
B_SMOOTHING = 2


@dataclass(frozen=True)
class DiagramGraph:
    """
    The 4-regular graph of a diagram with its three transition designations.

    Attributes:
        graph: One vertex per crossing, slots in tuple order
        a_state: A-smoothing at every crossing, slots {01|23}
        b_state: B-smoothing at every crossing, slots {03|12}
        crossing: The transition following the strands, slots {02|13}
        free_loops: Closed components without crossings
    """

    graph: FourRegularGraph
    a_state: Transversal
    b_state: Transversal
    crossing: Transversal
    free_loops: int = 0


def diagram_to_graph(pd: PlanarDiagramCode) -> DiagramGraph:
    """
    Join crossing slots that share an arc label.

    Raises:
        InputError: If an arc label is not used exactly twice
    """
    ends: Dict[int, List[HalfEdge]] = {}
    for i, crossing in enumerate(pd.crossings):
        for slot, arc in enumerate(crossing):
            ends.setdefault(arc, []).append(HalfEdge(pd.vertex_name(i), slot))
    edges = []
    for arc, pair in sorted(ends.items()):
        if len(pair) != 2:
            raise InputError(f"arc {arc} is used {len(pair)} times, expected 2", location=arc)
        edges.append((pair[0], pair[1]))
    vertices = tuple(pd.vertex_name(i) for i in range(pd.n))
    g = FourRegularGraph(vertices, tuple(edges))
    g.require_valid()
    return DiagramGraph(
        graph=g,
        a_state=Transversal.uniform(vertices, A_SMOOTHING),
        b_state=Transversal.uniform(vertices, B_SMOOTHING),
        crossing=Transversal.uniform(vertices, CROSSING),
        free_loops=pd.free_loops,
    )


def state_loops(d: DiagramGraph, state: int) -> int:
    """Loops of the state whose set bits mark B-smoothed crossings."""
    g = d.graph
    pairings = tuple(B_SMOOTHING if (state >> i) & 1 else A_SMOOTHING for i in range(g.n))
    return tracing.circuit_count(g, Transversal(g.vertices, pairings)) + d.free_loops


def _loop_value() -> SparsePoly:
    a = SparsePoly.variable("A")
    return -(a ** 2) - a ** -2


def bracket(
    pd: PlanarDiagramCode,
    max_crossings: Optional[int] = None,
    workers: Optional[int] = None,
) -> SparsePoly:
    """
    Kauffman bracket Σ_s A^{#A(s) − #B(s)} d^{loops(s) − 1}, d = −A² − A⁻².

    Raises:
        BudgetExceeded: Above ``max_crossings`` crossings
        InputError: For a diagram with no components
    """
    limit = max_crossings if max_crossings is not None else get_config().knot.max_crossings
    require_within("bracket state sum", pd.n, limit)
    d = diagram_to_graph(pd)
    n = pd.n

    def work(start: int, stop: int) -> Counter:
        states: Counter = Counter()
        for state in range(start, stop):
            b_count = bin(state).count("1")
            states[(n - 2 * b_count, state_loops(d, state))] += 1
        return states

    plan = ReductionPlan.from_config(1 << n, workers=workers)
    states = reduce_range("bracket state sum", plan, work, lambda x, y: x + y, Counter())
    if any(loops == 0 for _, loops in states):
        raise InputError("the empty diagram has no bracket")

    loop = _loop_value()
    total = SparsePoly.constant(0, ("A",))
    for (shift, loops), count in sorted(states.items()):
        total = total + count * SparsePoly.variable("A", shift) * loop ** (loops - 1)
    return total


def normalized_bracket(pd: PlanarDiagramCode, writhe: Optional[int] = None) -> SparsePoly:
    """
    (−A³)^{−w} ⟨D⟩.

    Raises:
        InputError: If no writhe is given and the code carries none
    """
    w = writhe if writhe is not None else pd.writhe
    if w is None:
        raise InputError("normalizing the bracket needs the diagram writhe")
    kink = -SparsePoly.variable("A", 3)
    return kink ** (-w) * bracket(pd)


def all_a_loops(pd: PlanarDiagramCode) -> Tuple[int, int]:
    """(loops of the all-A state, |P| predicted from the transition matroid)."""
    d = diagram_to_graph(pd)
    g = d.graph
    traced = state_loops(d, 0)
    if g.n == 0:
        return traced, d.free_loops
    predicted = g.n + g.component_count - rank_of_transversal(graph_matroid(g), d.a_state)
    return traced, predicted + d.free_loops
