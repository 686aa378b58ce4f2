"""Core services for transmat.

Each module is a set of functions over the entities; the submodules are
imported by name (``from src.core.services import tracing``) so that their
short function names stay unambiguous.
"""

from . import (
    knots,
    moves,
    planarity,
    polynomials,
    reduction,
    ribbon,
    tracing,
    transition_matroid,
    words,
)

__all__ = [
    "knots",
    "moves",
    "planarity",
    "polynomials",
    "reduction",
    "ribbon",
    "tracing",
    "transition_matroid",
    "words",
]
