"""Transitions and transversals - per-vertex slot pairings."""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Sequence, Tuple

from ..exceptions import InputError

# P0 = {01|23}, P1 = {02|13}, P2 = {03|12}; the mate of slot s under Pk is s ^ (k + 1).
PAIRINGS: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...] = (
    ((0, 1), (2, 3)),
    ((0, 2), (1, 3)),
    ((0, 3), (1, 2)),
)
PAIRING_TEXT = ("01|23", "02|13", "03|12")


def mate(slot: int, pairing: int) -> int:
    """Slot paired with ``slot`` by pairing ``pairing``."""
    return slot ^ (pairing + 1)


def pairing_of(a: int, b: int) -> int:
    """Index of the pairing that puts slots ``a`` and ``b`` together."""
    if a == b or not (0 <= a < 4 and 0 <= b < 4):
        raise InputError(f"slots {a} and {b} do not form a pair")
    return (a ^ b) - 1


def third_pairing(p: int, q: int) -> int:
    """The pairing that is neither ``p`` nor ``q``."""
    if p == q:
        raise InputError(f"pairings must differ, got {p} twice")
    return 3 - p - q


@dataclass(frozen=True, order=True)
class Transition:
    """
    A partition of the four slots at a vertex into two pairs.

    Attributes:
        vertex: Vertex name
        pairing: 0, 1 or 2 (see PAIRINGS)
    """

    vertex: str
    pairing: int

    def __post_init__(self) -> None:
        if self.pairing not in (0, 1, 2):
            raise InputError(f"pairing index must be 0, 1 or 2, got {self.pairing}")

    @property
    def pairs(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return PAIRINGS[self.pairing]

    def __str__(self) -> str:
        return f"{self.vertex}:t{self.pairing}"

    @classmethod
    def parse(cls, text: str) -> "Transition":
        name, colon, tag = text.strip().rpartition(":")
        if not colon or not name or tag not in ("t0", "t1", "t2"):
            raise InputError(f"expected <vertex>:t0|t1|t2, got {text!r}")
        return cls(name, int(tag[1]))


@dataclass(frozen=True)
class Transversal:
    """
    One transition per vertex.

    Serialises as a base-3 digit string in vertex declaration order; the
    first vertex is the most significant digit.

    Attributes:
        vertices: Vertex names in declaration order
        pairings: Pairing index per vertex
    """

    vertices: Tuple[str, ...]
    pairings: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "pairings", tuple(int(p) for p in self.pairings))
        if len(self.vertices) != len(self.pairings):
            raise InputError(f"{len(self.pairings)} pairings for {len(self.vertices)} vertices")
        for name, p in zip(self.vertices, self.pairings):
            if p not in (0, 1, 2):
                raise InputError(f"pairing at {name!r} must be 0, 1 or 2, got {p}", location=name)

    @classmethod
    def uniform(cls, vertices: Sequence[str], pairing: int) -> "Transversal":
        return cls(tuple(vertices), (pairing,) * len(vertices))

    @classmethod
    def from_digits(cls, vertices: Sequence[str], digits: str) -> "Transversal":
        digits = digits.strip()
        if len(digits) != len(vertices) or any(d not in "012" for d in digits):
            raise InputError(
                f"transversal {digits!r} must be {len(vertices)} base-3 digits"
            )
        return cls(tuple(vertices), tuple(int(d) for d in digits))

    @classmethod
    def from_index(cls, vertices: Sequence[str], index: int) -> "Transversal":
        n = len(vertices)
        if not 0 <= index < 3 ** n:
            raise InputError(f"transversal index {index} out of range for {n} vertices")
        digits = []
        for _ in range(n):
            index, d = divmod(index, 3)
            digits.append(d)
        return cls(tuple(vertices), tuple(reversed(digits)))

    @classmethod
    def from_transitions(cls, vertices: Sequence[str], transitions: Mapping[str, int]) -> "Transversal":
        missing = [v for v in vertices if v not in transitions]
        if missing:
            raise InputError(f"no transition given at {missing}")
        return cls(tuple(vertices), tuple(transitions[v] for v in vertices))

    @staticmethod
    def enumerate(vertices: Sequence[str]) -> Iterator["Transversal"]:
        """All 3^n transversals in base-3 index order."""
        vertices = tuple(vertices)
        for combo in itertools.product(range(3), repeat=len(vertices)):
            yield Transversal(vertices, combo)

    @property
    def digits(self) -> str:
        return "".join(str(p) for p in self.pairings)

    @property
    def index(self) -> int:
        value = 0
        for p in self.pairings:
            value = value * 3 + p
        return value

    def pairing_at(self, vertex: str) -> int:
        try:
            return self.pairings[self.vertices.index(vertex)]
        except ValueError:
            raise InputError(f"unknown vertex {vertex!r}", location=vertex) from None

    def __getitem__(self, vertex: str) -> Transition:
        return Transition(vertex, self.pairing_at(vertex))

    def transitions(self) -> Tuple[Transition, ...]:
        return tuple(Transition(v, p) for v, p in zip(self.vertices, self.pairings))

    def as_dict(self) -> Dict[str, int]:
        return dict(zip(self.vertices, self.pairings))

    def replace(self, vertex: str, pairing: int) -> "Transversal":
        i = self.vertices.index(vertex)
        return Transversal(self.vertices, self.pairings[:i] + (pairing,) + self.pairings[i + 1:])

    def is_disjoint_from(self, other: "Transversal") -> bool:
        """True when the two transversals differ at every vertex."""
        return all(a != b for a, b in zip(self.pairings, other.pairings))

    def __str__(self) -> str:
        return self.digits
