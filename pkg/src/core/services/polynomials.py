"""Polynomial invariants: parametrized Tutte sums, Martin, transition and interlace polynomials."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple, Union

from ...config import get_config
from ...infrastructure.logging import get_logger
from ..algebra import BinaryMatroid, SparsePoly
from ..algebra.gf2 import span_rank
from ..algebra.polynomial import ZETA
from ..entities import (
    BalancedOrientation,
    FourRegularGraph,
    SimpleGraph,
    Transition,
    TransitionGroundLabel,
    Transversal,
)
from ..exceptions import ConsistencyError, InputError
from . import tracing
from .reduction import ReductionPlan, reduce_range, require_transversal_budget, require_within
from .transition_matroid import graph_matroid

logger = get_logger("polynomials")

Weight = Union[int, SparsePoly]
# (r(S) - r(A), |A| - r(A)) -> summed weight products
Buckets = Dict[Tuple[int, int], Weight]


@dataclass(frozen=True)
class WeightAssignment:
    """
    α and β weights per transition.

    Attributes:
        alpha: Weight of a transition inside the chosen subset
        beta: Weight of a transition outside it
        default_alpha: α of transitions with no entry
        default_beta: β of transitions with no entry
    """

    alpha: Mapping[Transition, Weight] = field(default_factory=dict)
    beta: Mapping[Transition, Weight] = field(default_factory=dict)
    default_alpha: Weight = 1
    default_beta: Weight = 1

    @classmethod
    def uniform(cls, alpha: Weight = 1, beta: Weight = 1) -> "WeightAssignment":
        return cls(default_alpha=alpha, default_beta=beta)

    def pair(self, label: TransitionGroundLabel) -> Tuple[Weight, Weight]:
        if not isinstance(label, TransitionGroundLabel):
            return self.default_alpha, self.default_beta
        t = Transition(label.vertex, label.pairing)
        return self.alpha.get(t, self.default_alpha), self.beta.get(t, self.default_beta)


def _merge(a: Buckets, b: Buckets) -> Buckets:
    out = dict(a)
    for key, value in b.items():
        out[key] = out[key] + value if key in out else value
    return out


def _assemble(buckets: Buckets) -> SparsePoly:
    x1 = SparsePoly.variable("x") - 1
    y1 = SparsePoly.variable("y") - 1
    total = SparsePoly.constant(0, ("x", "y"))
    for (corank, nullity), weight in sorted(buckets.items()):
        total = total + weight * (x1 ** corank) * (y1 ** nullity)
    return total


def tutte_eval(
    m: BinaryMatroid,
    w: Optional[WeightAssignment] = None,
    restrict_to_transversals: bool = False,
    workers: Optional[int] = None,
    subset_cap: Optional[int] = None,
) -> SparsePoly:
    """
    Parametrized Tutte sum of a binary matroid, as a polynomial in x and y.

    Each subset A contributes Πα(A) Πβ(S−A) (x−1)^{r(S)−r(A)} (y−1)^{|A|−r(A)}.
    With ``restrict_to_transversals`` only subsets holding exactly one
    transition per vertex are summed, which needs transition-labelled ground
    elements.

    Args:
        m: The matroid
        w: Weights; all ones when omitted
        restrict_to_transversals: Sum over transversals instead of all subsets
        workers: Threads for the reduction
        subset_cap: Most subsets an unrestricted sum may visit

    Raises:
        BudgetExceeded: If the sum is over the cap
        InputError: If restricted mode meets a ground set without vertex triples
    """
    w = w or WeightAssignment.uniform()
    full_rank = m.rank()
    weights = [w.pair(label) for label in m.ground]

    if restrict_to_transversals:
        return _transversal_tutte(m, weights, full_rank, workers)

    cap = subset_cap if subset_cap is not None else get_config().matroid.tutte_subset_cap
    require_within("Tutte subset sum", 1 << m.size, cap)

    def work(start: int, stop: int) -> Buckets:
        buckets: Buckets = {}
        for mask in range(start, stop):
            product: Weight = 1
            for i, (alpha, beta) in enumerate(weights):
                product = product * (alpha if (mask >> i) & 1 else beta)
            if not product:
                continue
            r = m.rank_mask(mask)
            key = (full_rank - r, bin(mask).count("1") - r)
            buckets[key] = buckets[key] + product if key in buckets else product
        return buckets

    plan = ReductionPlan.from_config(1 << m.size, workers=workers)
    return _assemble(reduce_range("Tutte subset sum", plan, work, _merge, {}))


def _transversal_tutte(
    m: BinaryMatroid,
    weights: List[Tuple[Weight, Weight]],
    full_rank: int,
    workers: Optional[int],
) -> SparsePoly:
    vertices: List[str] = []
    columns: Dict[str, List[int]] = {}
    for i, label in enumerate(m.ground):
        if not isinstance(label, TransitionGroundLabel):
            raise InputError(f"ground element {label!r} is not a transition")
        if label.vertex not in columns:
            vertices.append(label.vertex)
            columns[label.vertex] = [-1, -1, -1]
        columns[label.vertex][label.pairing] = i
    for v in vertices:
        if -1 in columns[v]:
            raise InputError(f"vertex {v!r} does not carry all three transitions", location=v)
    require_transversal_budget("transversal Tutte sum", len(vertices))
    table = [columns[v] for v in vertices]

    def work(start: int, stop: int) -> Buckets:
        buckets: Buckets = {}
        for k in range(start, stop):
            mask = 0
            product: Weight = 1
            for i, p in enumerate(Transversal.from_index(vertices, k).pairings):
                for q in range(3):
                    alpha, beta = weights[table[i][q]]
                    product = product * (alpha if q == p else beta)
                mask |= 1 << table[i][p]
            if not product:
                continue
            r = m.rank_mask(mask)
            key = (full_rank - r, len(vertices) - r)
            buckets[key] = buckets[key] + product if key in buckets else product
        return buckets

    plan = ReductionPlan.from_config(3 ** len(vertices), workers=workers)
    return _assemble(reduce_range("transversal Tutte sum", plan, work, _merge, {}))


# -- Martin polynomials -----------------------------------------------------------


def _zeta_series(exponents: Counter) -> SparsePoly:
    """Σ count · (ζ−1)^e."""
    z1 = SparsePoly.variable(ZETA) - 1
    total = SparsePoly.constant(0, (ZETA,))
    for e, count in sorted(exponents.items()):
        total = total + count * z1 ** e
    return total


def _normalize(reduced: SparsePoly, c: int) -> SparsePoly:
    if c == 0:
        raise InputError("the normalized Martin polynomial needs at least one component")
    return reduced * (SparsePoly.variable(ZETA) - 1) ** (c - 1)


def martin_reduced(g: FourRegularGraph, workers: Optional[int] = None) -> SparsePoly:
    """Σ_P (ζ−1)^{|P|−c(F)} by tracing every transversal."""
    c = g.component_count
    sizes = tracing.partition_sizes(g, workers=workers)
    return _zeta_series(Counter(size - c for size in sizes))


def martin_las_vergnas(g: FourRegularGraph, workers: Optional[int] = None) -> SparsePoly:
    """Σ_P (ζ−1)^{|P|−1}."""
    return _normalize(martin_reduced(g, workers=workers), g.component_count)


martin_direct = martin_las_vergnas


def martin_via_matroid(
    g: FourRegularGraph,
    workers: Optional[int] = None,
    m: Optional[BinaryMatroid] = None,
) -> SparsePoly:
    """
    Martin polynomial read off the transition matroid alone.

    The transversal-restricted Tutte sum with unit weights is evaluated at
    x = ζ, y = 2 and multiplied by (ζ−1)^{c(F)−1}.
    """
    m = m or graph_matroid(g)
    f = tutte_eval(m, restrict_to_transversals=True, workers=workers)
    reduced = f.substitute(x=SparsePoly.variable(ZETA), y=2).with_variables((ZETA,))
    return _normalize(reduced, g.component_count)


def martin(g: FourRegularGraph, via: str = "direct", workers: Optional[int] = None) -> SparsePoly:
    """
    Martin polynomial by the chosen route.

    Raises:
        ConsistencyError: If ``via="both"`` and the two routes disagree
    """
    if via == "direct":
        return martin_direct(g, workers=workers)
    if via == "matroid":
        return martin_via_matroid(g, workers=workers)
    if via != "both":
        raise InputError(f"unknown Martin route {via!r}")
    direct = martin_direct(g, workers=workers)
    matroid = martin_via_matroid(g, workers=workers)
    if direct != matroid:
        logger.consistency_failure("Martin polynomial", f"direct {direct} vs matroid {matroid}")
        raise ConsistencyError(f"Martin routes disagree: direct {direct}, matroid {matroid}")
    return direct


def directed_martin(
    g: FourRegularGraph,
    o: Optional[BalancedOrientation] = None,
    normalized: bool = True,
) -> SparsePoly:
    """
    Σ over the 2^n direction-respecting transversals of (ζ−1)^{|P|−1}.

    Args:
        g: A valid 4-regular graph
        o: Balanced orientation; the one walked by ``euler_system(g)`` if omitted
        normalized: False gives Σ (ζ−1)^{|P|−c(F)}

    Raises:
        InputError: If the orientation is not balanced
    """
    o = o or tracing.balanced_orientation(g)
    if o.graph != g:
        raise InputError("orientation belongs to a different graph")
    if not o.is_balanced():
        raise InputError("orientation is not balanced")
    require_transversal_budget("directed Martin sum", g.n)
    choices = [[p for p in range(3) if o.respects(v, p)] for v in g.vertices]
    c = g.component_count
    exponents: Counter = Counter()
    for k in range(1 << g.n):
        pairings = tuple(choices[i][(k >> i) & 1] for i in range(g.n))
        exponents[tracing.circuit_count(g, Transversal(g.vertices, pairings)) - c] += 1
    reduced = _zeta_series(exponents)
    return _normalize(reduced, c) if normalized else reduced


# -- transition and interlace polynomials ------------------------------------------


def transition_poly(
    g: FourRegularGraph,
    weights: Optional[Mapping[Transition, Weight]] = None,
    y: Optional[Weight] = None,
    workers: Optional[int] = None,
) -> SparsePoly:
    """
    Σ_P (Π_v w(τ_P(v))) · y^{|P|−c(F)}.

    Transitions without a weight count 1. ``y`` stays symbolic when omitted.
    """
    weights = weights or {}
    sizes = tracing.partition_sizes(g, workers=workers)
    c = g.component_count
    table = [[weights.get(Transition(v, p), 1) for p in range(3)] for v in g.vertices]
    buckets: Dict[int, Weight] = {}
    for k, size in enumerate(sizes):
        product: Weight = 1
        for i, p in enumerate(Transversal.from_index(g.vertices, k).pairings):
            product = product * table[i][p]
        if not product:
            continue
        e = size - c
        buckets[e] = buckets[e] + product if e in buckets else product
    base = SparsePoly.variable("y") if y is None else y
    total = SparsePoly.constant(0, ("y",) if y is None else ())
    for e, weight in sorted(buckets.items()):
        total = total + weight * base ** e
    return total


def interlace_poly(h: SimpleGraph, cap: Optional[int] = None, workers: Optional[int] = None) -> SparsePoly:
    """
    q(h; x) = Σ_{S⊆V} (x−1)^{|S| − rank A[S]}, ranks over GF(2).

    Raises:
        BudgetExceeded: If ``h`` has more than ``cap`` vertices
    """
    cap = cap if cap is not None else get_config().matroid.interlace_vertex_cap
    require_within("interlace polynomial", h.n, cap)
    rows = h.rows

    def work(start: int, stop: int) -> Counter:
        nullities: Counter = Counter()
        for mask in range(start, stop):
            members = [i for i in range(h.n) if (mask >> i) & 1]
            rank = span_rank(rows[i] & mask for i in members)
            nullities[len(members) - rank] += 1
        return nullities

    plan = ReductionPlan.from_config(1 << h.n, workers=workers)
    nullities = reduce_range("interlace polynomial", plan, work, lambda a, b: a + b, Counter())
    x1 = SparsePoly.variable("x") - 1
    total = SparsePoly.constant(0, ("x",))
    for e, count in sorted(nullities.items()):
        total = total + count * x1 ** e
    return total
