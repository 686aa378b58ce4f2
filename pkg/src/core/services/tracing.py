"""
Circuit tracing on 4-regular graphs.

Half-edges are handled as integer ids ``4 * vertex_index + slot``. Under
pairing ``p`` the slot paired with ``s`` is ``s ^ (p + 1)``, and since the
xor only touches the two low bits the same expression works on ids.
"""

from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from ...infrastructure.logging import get_logger
from ..entities import (
    BalancedOrientation,
    Circuit,
    CircuitPartition,
    EulerSystem,
    FourRegularGraph,
    LabelKind,
    SimpleGraph,
    TouchGraph,
    Transition,
    Transversal,
    ValidationReport,
    pairing_of,
)
from ..exceptions import InputError
from .reduction import ReductionPlan, reduce_range, require_transversal_budget

logger = get_logger("tracing")


def validate(g: FourRegularGraph) -> ValidationReport:
    """Check 4-regularity; the report names the first violated slot."""
    return g.check()


# -- raw tracing ---------------------------------------------------------------


def _trace(partner: Sequence[int], pairings: Sequence[int]) -> List[List[int]]:
    circuits = []
    seen = bytearray(len(partner))
    for start in range(len(partner)):
        if seen[start]:
            continue
        sequence = []
        h = start
        while True:
            q = partner[h]
            sequence.append(h)
            sequence.append(q)
            seen[h] = seen[q] = 1
            h = q ^ (pairings[q >> 2] + 1)
            if h == start:
                break
        circuits.append(sequence)
    return circuits


def _count(partner: Sequence[int], pairings: Sequence[int]) -> int:
    seen = bytearray(len(partner))
    count = 0
    for start in range(len(partner)):
        if seen[start]:
            continue
        count += 1
        h = start
        while True:
            q = partner[h]
            seen[h] = seen[q] = 1
            h = q ^ (pairings[q >> 2] + 1)
            if h == start:
                break
    return count


def canonical_circuit(sequence: Sequence[int]) -> Circuit:
    """
    Minimal form of a circuit over edge-aligned rotations and reversal.

    Only even rotations are considered so positions ``(2i, 2i+1)`` stay edges.
    """
    if not sequence:
        return ()
    forward = list(sequence)
    backward = forward[::-1]
    best = None
    for seq in (forward, backward):
        for r in range(0, len(seq), 2):
            candidate = tuple(seq[r:] + seq[:r])
            if best is None or candidate < best:
                best = candidate
    return best


def _check_transversal(g: FourRegularGraph, t: Transversal) -> None:
    if t.vertices != g.vertices:
        raise InputError("transversal vertices do not match the graph's vertex order")


def trace_partition(g: FourRegularGraph, t: Transversal) -> CircuitPartition:
    """
    Follow transversal ``t`` through ``g``.

    Args:
        g: A valid 4-regular graph
        t: One pairing per vertex, in the graph's vertex order

    Returns:
        The circuit partition, circuits canonical and sorted
    """
    _check_transversal(g, t)
    raw = _trace(g.partner_table, t.pairings)
    circuits = tuple(sorted(canonical_circuit(c) for c in raw))
    return CircuitPartition(g, t, circuits)


def circuit_count(g: FourRegularGraph, t: Transversal) -> int:
    """|P| for transversal ``t`` without building the circuits."""
    _check_transversal(g, t)
    return _count(g.partner_table, t.pairings)


def partition_sizes(
    g: FourRegularGraph,
    workers: Optional[int] = None,
    max_vertices: Optional[int] = None,
) -> List[int]:
    """|P| for all 3^n transversals, in transversal index order."""
    require_transversal_budget("partition sizes", g.n, max_vertices)
    partner = g.partner_table

    def work(start: int, stop: int) -> List[int]:
        return [_count(partner, Transversal.from_index(g.vertices, k).pairings) for k in range(start, stop)]

    plan = ReductionPlan.from_config(3 ** g.n, workers=workers)
    return reduce_range("partition sizes", plan, work, lambda a, b: a + b, [])


# -- transversal helpers ---------------------------------------------------------


def transversal_from_index(g: FourRegularGraph, index: int) -> Transversal:
    return Transversal.from_index(g.vertices, index)


def index_of(t: Transversal) -> int:
    return t.index


def parse_transversal(g: FourRegularGraph, digits: str) -> Transversal:
    """Base-3 digit string, one digit per vertex in declaration order."""
    return Transversal.from_digits(g.vertices, digits)


def connected_components(g: FourRegularGraph) -> List[List[str]]:
    return [list(c) for c in g.components]


def component_count(g: FourRegularGraph) -> int:
    return g.component_count


# -- Euler systems ---------------------------------------------------------------


def _hierholzer_pairings(g: FourRegularGraph) -> List[int]:
    partner = g.partner_table
    pairings = [0] * g.n
    used = bytearray(len(partner))
    for component in g.components:
        start = g.index[component[0]]
        stack: List[Tuple[int, Optional[int]]] = [(start, None)]
        path: List[Tuple[int, Optional[int]]] = []
        while stack:
            v, _ = stack[-1]
            free = next((4 * v + s for s in range(4) if not used[4 * v + s]), None)
            if free is None:
                path.append(stack.pop())
                continue
            q = partner[free]
            used[free] = used[q] = 1
            stack.append((q >> 2, q))
        path.reverse()
        arrivals = [a for _, a in path[1:]]
        for i, arrival in enumerate(arrivals):
            departure = partner[arrivals[(i + 1) % len(arrivals)]]
            pairings[arrival >> 2] = pairing_of(arrival & 3, departure & 3)
    return pairings


def euler_system(g: FourRegularGraph) -> EulerSystem:
    """
    A deterministic Euler system.

    Each component is walked Hierholzer style from its lowest-index vertex,
    always leaving through the lowest unused slot; the resulting transitions
    are then traced to canonical circuits.
    """
    t = Transversal(g.vertices, tuple(_hierholzer_pairings(g)))
    return EulerSystem.from_partition(trace_partition(g, t))


def euler_system_from_transversal(g: FourRegularGraph, t: Transversal) -> EulerSystem:
    """Raises InputError unless |P| = c(F)."""
    return EulerSystem.from_partition(trace_partition(g, t))


def _visits(c: CircuitPartition) -> Dict[str, Tuple[int, int, int, int]]:
    """Per vertex: (in1, out1, in2, out2) half-edge ids along its circuit."""
    visits: Dict[str, List[int]] = {}
    for circuit in c.circuits:
        length = len(circuit)
        for j in range(1, length, 2):
            name = c.graph.vertex_of(circuit[j])
            visits.setdefault(name, []).extend((circuit[j], circuit[(j + 1) % length]))
    return {v: tuple(hs) for v, hs in visits.items()}  # type: ignore[misc]


def label_pairings(c: EulerSystem) -> Dict[str, Dict[LabelKind, int]]:
    """Per vertex, the pairing carrying each of the labels φ, χ, ψ."""
    out = {}
    for v, (in1, out1, in2, out2) in _visits(c).items():
        out[v] = {
            LabelKind.PHI: pairing_of(in1 & 3, out1 & 3),
            LabelKind.CHI: pairing_of(in1 & 3, out2 & 3),
            LabelKind.PSI: pairing_of(in1 & 3, in2 & 3),
        }
    return out


def transition_labels(c: EulerSystem) -> Dict[Transition, LabelKind]:
    """
    Label every transition relative to ``c``.

    φ is the transition the circuit follows, χ the other one consistent with
    the circuit's direction and ψ the one pairing the two arrivals.
    """
    labels = {}
    for v, kinds in label_pairings(c).items():
        for kind, pairing in kinds.items():
            labels[Transition(v, pairing)] = kind
    return labels


def kappa_transform(c: EulerSystem, v: str) -> EulerSystem:
    """
    Reverse the walk between the two visits to ``v``.

    Only the transition at ``v`` changes: it becomes the one that was ψ.
    """
    if v not in c.graph.index:
        raise InputError(f"unknown vertex {v!r}", location=v)
    psi = label_pairings(c)[v][LabelKind.PSI]
    return euler_system_from_transversal(c.graph, c.transversal.replace(v, psi))


def all_euler_systems(g: FourRegularGraph) -> List[EulerSystem]:
    """Every Euler system, reached from ``euler_system(g)`` by κ-transforms."""
    first = euler_system(g)
    found = {first.transversal: first}
    queue = deque([first])
    while queue:
        current = queue.popleft()
        for v in g.vertices:
            nxt = kappa_transform(current, v)
            if nxt.transversal not in found:
                found[nxt.transversal] = nxt
                queue.append(nxt)
    return sorted(found.values(), key=lambda e: e.transversal.index)


def euler_transversals(g: FourRegularGraph, max_vertices: Optional[int] = None) -> List[Transversal]:
    """Transversals with |P| = c(F), found by exhaustive tracing."""
    sizes = partition_sizes(g, max_vertices=max_vertices)
    c = g.component_count
    return [Transversal.from_index(g.vertices, k) for k, size in enumerate(sizes) if size == c]


# -- structures read off an Euler system -------------------------------------------


def interlacement(c: EulerSystem) -> SimpleGraph:
    """v and w are adjacent when they alternate v..w..v..w along a circuit."""
    g = c.graph
    rows = [0] * g.n
    for i in range(c.size):
        word = c.vertex_word(i)
        where: Dict[str, List[int]] = {}
        for position, name in enumerate(word):
            where.setdefault(name, []).append(position)
        names = list(where)
        for a_i, a in enumerate(names):
            a1, a2 = where[a]
            for b in names[a_i + 1:]:
                b1, b2 = where[b]
                if (a1 < b1 < a2) != (a1 < b2 < a2):
                    ia, ib = g.index[a], g.index[b]
                    rows[ia] |= 1 << ib
                    rows[ib] |= 1 << ia
    return SimpleGraph(g.vertices, tuple(rows))


def local_complement(h: SimpleGraph, v: str) -> SimpleGraph:
    return h.local_complement(v)


def touch_graph(p: CircuitPartition) -> TouchGraph:
    """An edge per vertex joining the circuit(s) through its two transition pairs."""
    g = p.graph
    owner = p.circuit_of
    edges = []
    for i, v in enumerate(g.vertices):
        pairing = p.transversal.pairings[i]
        other = 1 if pairing != 0 else 2
        a, b = owner[4 * i], owner[4 * i + other]
        edges.append((v, min(a, b), max(a, b)))
    return TouchGraph(p, tuple(edges))


def balanced_orientation(g: FourRegularGraph, c: Optional[EulerSystem] = None) -> BalancedOrientation:
    """Direct every edge the way the Euler system walks it."""
    c = c or euler_system(g)
    initial = frozenset(h for circuit in c.circuits for h in circuit[0::2])
    return BalancedOrientation(g, initial)


def vertex_profile(g: FourRegularGraph, t: Transversal, v: str) -> Tuple[int, int, int]:
    """|P| for the three transitions at ``v`` with the rest of ``t`` fixed."""
    if v not in g.index:
        raise InputError(f"unknown vertex {v!r}", location=v)
    return tuple(circuit_count(g, t.replace(v, p)) for p in range(3))  # type: ignore[return-value]


def restricted_euler_system(g: FourRegularGraph, t1: Transversal, t2: Transversal) -> EulerSystem:
    """
    An Euler system using only transitions of ``t1`` and ``t2``.

    Starts from the partition of ``t1`` and switches, one vertex at a time, to
    ``t2`` wherever the vertex joins two different circuits; each switch
    merges those circuits.

    Raises:
        InputError: If ``t1`` and ``t2`` agree at some vertex
    """
    _check_transversal(g, t1)
    _check_transversal(g, t2)
    if not t1.is_disjoint_from(t2):
        raise InputError("transversals must differ at every vertex")
    current = t1
    target = g.component_count
    while True:
        p = trace_partition(g, current)
        if p.size == target:
            return EulerSystem.from_partition(p)
        joining = next(v for v, a, b in touch_graph(p).edges if a != b)
        current = current.replace(joining, t2.pairing_at(joining))
