"""Domain entities for transmat."""

from .graph import SLOTS, Edge, FourRegularGraph, HalfEdge, ValidationReport
from .transition import PAIRINGS, Transition, Transversal, mate, pairing_of, third_pairing
from .partition import (
    BalancedOrientation,
    Circuit,
    CircuitPartition,
    Direction,
    EulerSystem,
    LabelKind,
    TouchGraph,
    TransitionGroundLabel,
)
from .simple_graph import SimpleGraph
from .word import DowFamily
from .ribbon import RibbonEdge, RibbonGraph
from .diagram import PlanarDiagramCode

__all__ = [
    "SLOTS",
    "Edge",
    "FourRegularGraph",
    "HalfEdge",
    "ValidationReport",
    "PAIRINGS",
    "Transition",
    "Transversal",
    "mate",
    "pairing_of",
    "third_pairing",
    "BalancedOrientation",
    "Circuit",
    "CircuitPartition",
    "Direction",
    "EulerSystem",
    "LabelKind",
    "TouchGraph",
    "TransitionGroundLabel",
    "SimpleGraph",
    "DowFamily",
    "RibbonEdge",
    "RibbonGraph",
    "PlanarDiagramCode",
]
