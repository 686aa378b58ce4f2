"""Circuit partitions, Euler systems and the structures read off them."""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Dict, List, Tuple

import networkx as nx

from ..exceptions import InputError
from .graph import FourRegularGraph, HalfEdge
from .transition import Transversal

# A circuit is a cyclic sequence of half-edge ids h0, partner(h0), h1, partner(h1), ...
# Positions (2i, 2i+1) are edges; (2i+1, 2i+2) are the transition pairs used.
Circuit = Tuple[int, ...]


class LabelKind(Enum):
    """Transition label relative to an Euler system."""
    PHI = "φ"
    CHI = "χ"
    PSI = "ψ"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class TransitionGroundLabel:
    """
    A transition matroid ground element.

    Identity is the slot pairing at the vertex; the φ/χ/ψ kind depends on
    the Euler system the matroid was built from and is carried as metadata.

    Attributes:
        vertex: Vertex name
        pairing: Slot pairing index 0..2
        kind: Label with respect to the building Euler system
    """

    vertex: str
    pairing: int
    kind: LabelKind = field(default=LabelKind.PHI, compare=False)

    def __str__(self) -> str:
        return f"{self.kind}{self.vertex}=t{self.pairing}"


@dataclass(frozen=True)
class CircuitPartition:
    """
    The circuits obtained by following one transition at every vertex.

    Attributes:
        graph: The 4-regular graph being partitioned
        transversal: The inducing transition choice
        circuits: Canonical circuits, sorted
    """

    graph: FourRegularGraph
    transversal: Transversal
    circuits: Tuple[Circuit, ...]

    def __len__(self) -> int:
        return len(self.circuits)

    @property
    def size(self) -> int:
        return len(self.circuits)

    @cached_property
    def circuit_of(self) -> Dict[int, int]:
        """Half-edge id -> index of the circuit containing it."""
        return {h: i for i, circuit in enumerate(self.circuits) for h in circuit}

    def half_edges(self, index: int) -> List[HalfEdge]:
        return [self.graph.half_edge(h) for h in self.circuits[index]]

    def vertex_word(self, index: int) -> List[str]:
        """Vertices in the order the circuit passes through them."""
        circuit = self.circuits[index]
        return [self.graph.vertex_of(circuit[j]) for j in range(1, len(circuit), 2)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "transversal": self.transversal.digits,
            "size": self.size,
            "circuits": [[str(h) for h in self.half_edges(i)] for i in range(self.size)],
        }


@dataclass(frozen=True)
class EulerSystem(CircuitPartition):
    """A circuit partition with exactly one circuit per connected component."""

    def __post_init__(self) -> None:
        if len(self.circuits) != self.graph.component_count:
            raise InputError(
                f"transversal {self.transversal.digits} gives {len(self.circuits)} circuits "
                f"but the graph has {self.graph.component_count} components"
            )

    @classmethod
    def from_partition(cls, partition: CircuitPartition) -> "EulerSystem":
        return cls(partition.graph, partition.transversal, partition.circuits)

    def words(self) -> List[List[str]]:
        return [self.vertex_word(i) for i in range(self.size)]


class Direction(Enum):
    """Whether a half-edge is the tail or the head of its directed edge."""
    INITIAL = "initial"
    TERMINAL = "terminal"


@dataclass(frozen=True)
class BalancedOrientation:
    """
    Edge directions with two outgoing and two incoming half-edges per vertex.

    Attributes:
        graph: Oriented graph
        initial: Half-edge ids that are edge tails
    """

    graph: FourRegularGraph
    initial: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "initial", frozenset(self.initial))

    def direction(self, half_edge: HalfEdge) -> Direction:
        h = self.graph.half_edge_id(half_edge)
        return Direction.INITIAL if h in self.initial else Direction.TERMINAL

    def is_balanced(self) -> bool:
        """Two initial slots per vertex and one initial end per edge."""
        table = self.graph.partner_table
        for v in range(self.graph.n):
            if sum(1 for s in range(4) if 4 * v + s in self.initial) != 2:
                return False
        return all((h in self.initial) != (table[h] in self.initial) for h in range(len(table)))

    def respects(self, vertex: str, pairing: int) -> bool:
        """True when each pair of the transition joins an incoming and an outgoing end."""
        base = 4 * self.graph.index[vertex]
        in_first = (base + pairing_slot(pairing, 0)) in self.initial
        in_second = (base + pairing_slot(pairing, 1)) in self.initial
        return in_first != in_second

    def reversed(self) -> "BalancedOrientation":
        everything = frozenset(range(4 * self.graph.n))
        return BalancedOrientation(self.graph, everything - self.initial)

    def to_dict(self) -> Dict[str, str]:
        return {
            str(self.graph.half_edge(h)): (Direction.INITIAL if h in self.initial else Direction.TERMINAL).value
            for h in range(4 * self.graph.n)
        }


def pairing_slot(pairing: int, which: int) -> int:
    """The slot paired with slot 0 (``which=0`` returns 0 itself)."""
    return 0 if which == 0 else pairing + 1


@dataclass(frozen=True)
class TouchGraph:
    """
    One node per circuit of a partition and one edge per graph vertex.

    Attributes:
        partition: The partition the nodes come from
        edges: (vertex name, circuit index, circuit index) triples
    """

    partition: CircuitPartition
    edges: Tuple[Tuple[str, int, int], ...]

    @property
    def node_count(self) -> int:
        return self.partition.size

    @property
    def nodes(self) -> Tuple[int, ...]:
        return tuple(range(self.partition.size))

    def loops(self) -> List[str]:
        return [v for v, a, b in self.edges if a == b]

    def to_networkx(self) -> nx.MultiGraph:
        """Multigraph whose edges are keyed by vertex name."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.nodes)
        for v, a, b in self.edges:
            graph.add_edge(a, b, key=v, label=v)
        return graph

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nodes": self.node_count,
            "edges": [[v, a, b] for v, a, b in self.edges],
        }
