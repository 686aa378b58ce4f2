"""Double occurrence words: parsing, moves, and the word/graph correspondence."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

from ..entities import (
    DowFamily,
    EulerSystem,
    FourRegularGraph,
    HalfEdge,
    SimpleGraph,
    Transversal,
)
from ..entities.word import Word
from ..exceptions import InputError
from . import tracing


def parse_dow(text: str) -> DowFamily:
    """Words separated by ``;``, letters by whitespace; blank text is the empty family."""
    if not text.strip():
        return DowFamily(())
    words = []
    for i, chunk in enumerate(text.split(";")):
        letters = chunk.split()
        if not letters:
            raise InputError(f"word {i} is empty", location=i)
        words.append(tuple(letters))
    return DowFamily(tuple(words))


def _rows_for_words(vertices: Sequence[str], words: Sequence[Word]) -> Tuple[int, ...]:
    position = {v: i for i, v in enumerate(vertices)}
    rows = [0] * len(vertices)
    for word in words:
        where: Dict[str, List[int]] = {}
        for q, letter in enumerate(word):
            where.setdefault(letter, []).append(q)
        letters = list(where)
        for i, a in enumerate(letters):
            a1, a2 = where[a]
            for b in letters[i + 1:]:
                b1, b2 = where[b]
                if (a1 < b1 < a2) != (a1 < b2 < a2):
                    rows[position[a]] |= 1 << position[b]
                    rows[position[b]] |= 1 << position[a]
    return tuple(rows)


def interlacement_of(f: DowFamily) -> SimpleGraph:
    """Interlacement graph of a family, vertices in first-occurrence order."""
    letters = f.letters
    return SimpleGraph(tuple(letters), _rows_for_words(letters, f.words))


# -- equivalences ---------------------------------------------------------------


@dataclass(frozen=True)
class CyclicPermute:
    """Rotate word ``word`` left by ``shift`` letters."""
    word: int
    shift: int


@dataclass(frozen=True)
class Reverse:
    word: int


@dataclass(frozen=True)
class Concatenate:
    """Replace words ``first`` and ``second`` with first+second, at ``first``'s place."""
    first: int
    second: int


@dataclass(frozen=True)
class Split:
    """Cut word ``word`` before letter ``position`` into two words."""
    word: int
    position: int


Move = Union[CyclicPermute, Reverse, Concatenate, Split]


def _word(f: DowFamily, index: int) -> Word:
    if not 0 <= index < len(f.words):
        raise InputError(f"no word {index} in a family of {len(f.words)}", location=index)
    return f.words[index]


def _replace(f: DowFamily, index: int, new: Sequence[Word]) -> DowFamily:
    return DowFamily(f.words[:index] + tuple(new) + f.words[index + 1:])


def apply_equivalence(f: DowFamily, move: Move) -> DowFamily:
    """
    Apply one equivalence move.

    Raises:
        InputError: For a bad word index or a split that separates a letter pair
    """
    if isinstance(move, CyclicPermute):
        w = _word(f, move.word)
        shift = move.shift % len(w)
        return _replace(f, move.word, [w[shift:] + w[:shift]])
    if isinstance(move, Reverse):
        return _replace(f, move.word, [_word(f, move.word)[::-1]])
    if isinstance(move, Concatenate):
        if move.first == move.second:
            raise InputError("cannot concatenate a word with itself")
        joined = _word(f, move.first) + _word(f, move.second)
        words = list(f.words)
        words[move.first] = joined
        del words[move.second]
        return DowFamily(tuple(words))
    if isinstance(move, Split):
        w = _word(f, move.word)
        left, right = w[: move.position], w[move.position:]
        if not left or not right:
            raise InputError(f"split position {move.position} leaves an empty word")
        straddling = set(left) & set(right)
        if straddling:
            raise InputError(
                f"split at {move.position} separates the occurrences of {sorted(straddling)}",
                location=move.position,
            )
        return _replace(f, move.word, [left, right])
    raise InputError(f"unknown move {move!r}")


# -- turnarounds ----------------------------------------------------------------


def infer_blocks(word: Word, v_prime: Set[str]) -> Tuple[int, int, int]:
    """
    Cut points ``(i, j, k)`` of ``W1' W1'' W2' W2''`` from the letter classes.

    ``W1'`` may be empty when the word starts with a V'' letter.
    """
    runs: List[Tuple[bool, int]] = []
    for q, letter in enumerate(word):
        primed = letter in v_prime
        if not runs or runs[-1][0] != primed:
            runs.append((primed, q))
    if runs and not runs[0][0]:
        runs.insert(0, (True, 0))
    if len(runs) > 4:
        raise InputError("word does not factor as W1' W1'' W2' W2'' for these letter classes")
    bounds = [start for _, start in runs[1:]] + [len(word)] * (4 - len(runs))
    i, j, k = bounds[:3]
    return i, j, k


def turnaround(
    f: DowFamily,
    word: int,
    v_prime: Set[str],
    cuts: Optional[Tuple[int, int, int]] = None,
    variant: int = 1,
) -> DowFamily:
    """
    Reverse blocks of ``W1' W1'' W2' W2''``.

    Variant 1 reverses ``W1''`` and ``W2''``, variant 2 reverses ``W1'`` and
    ``W2'``, variant 3 reverses all four blocks in place.

    Args:
        f: Family holding the word
        word: Index of the word
        v_prime: Letters of the primed class; the rest of the word is V''
        cuts: Block boundaries ``(i, j, k)``; inferred from the classes if omitted
        variant: 1, 2 or 3

    Raises:
        InputError: If the blocks mix letter classes
    """
    if variant not in (1, 2, 3):
        raise InputError(f"turnaround variant must be 1, 2 or 3, got {variant}")
    w = _word(f, word)
    v_prime = set(v_prime)
    i, j, k = cuts if cuts is not None else infer_blocks(w, v_prime)
    if not 0 <= i <= j <= k <= len(w):
        raise InputError(f"cut points {(i, j, k)} out of order for a word of length {len(w)}")
    blocks = [w[:i], w[i:j], w[j:k], w[k:]]
    for b, block in enumerate(blocks):
        primed = b % 2 == 0
        wrong = [x for x in block if (x in v_prime) != primed]
        if wrong:
            raise InputError(
                f"block {b + 1} holds {wrong[0]!r} from the wrong letter class", location=wrong[0]
            )
    flip = {1: (1, 3), 2: (0, 2), 3: (0, 1, 2, 3)}[variant]
    new = sum((block[::-1] if b in flip else block for b, block in enumerate(blocks)), ())
    return _replace(f, word, [new])


# -- splitting and canonical forms -------------------------------------------------


def _components_of_word(word: Word) -> Dict[str, int]:
    letters = list(dict.fromkeys(word))
    graph = SimpleGraph(tuple(letters), _rows_for_words(letters, [word]))
    return {v: i for i, component in enumerate(graph.components()) for v in component}


def split_concatenation(word: Sequence[str]) -> Optional[Tuple[Word, Word]]:
    """
    Split a word with disconnected interlacement into two concatenated subwords.

    The word is rotated so its first and last letters lie in different
    interlacement components, then cut after the last letter from the first
    letter's component.

    Returns:
        The two subwords, or None when the interlacement graph is connected
    """
    w = DowFamily.single(word).words[0]
    component = _components_of_word(w)
    if len(set(component.values())) <= 1:
        return None
    shift = next(s for s in range(len(w)) if component[w[s]] != component[w[s - 1]])
    rotated = w[shift:] + w[:shift]
    home = component[rotated[0]]
    last = max(q for q, letter in enumerate(rotated) if component[letter] == home)
    return rotated[: last + 1], rotated[last + 1:]


def _pattern(word: Word) -> Tuple[int, ...]:
    first: Dict[str, int] = {}
    return tuple(first.setdefault(letter, len(first)) for letter in word)


def canonical_word(word: Sequence[str]) -> Word:
    """
    Representative of a word under rotation and reversal.

    Candidates are ordered by their first-occurrence pattern, then by letters.
    """
    w = tuple(word)
    if not w:
        return w
    candidates = []
    for seq in (w, w[::-1]):
        for r in range(len(seq)):
            candidates.append(seq[r:] + seq[:r])
    return min(candidates, key=lambda c: (_pattern(c), c))


def canonical_family(f: DowFamily) -> Tuple[Word, ...]:
    """Canonical words of every interlacement component, sorted."""
    out = []
    for word in f.words:
        component = _components_of_word(word)
        for c in sorted(set(component.values())):
            out.append(canonical_word([x for x in word if component[x] == c]))
    return tuple(sorted(out))


def families_equivalent(f1: DowFamily, f2: DowFamily) -> bool:
    return canonical_family(f1) == canonical_family(f2)


# -- words and graphs ---------------------------------------------------------------


def graph_from_family(f: DowFamily) -> Tuple[FourRegularGraph, EulerSystem]:
    """
    The 4-regular graph and Euler system recorded by a family.

    A letter's first visit arrives in slot 0 and leaves by slot 1, its second
    visit arrives in slot 2 and leaves by slot 3, so every transition of the
    Euler system is {01|23}.
    """
    vertices = tuple(f.letters)
    edges = []
    for word in f.words:
        visits = []
        seen: Set[str] = set()
        for letter in word:
            visits.append((letter, 2 if letter in seen else 0))
            seen.add(letter)
        for q, (letter, arrival) in enumerate(visits):
            nxt_letter, nxt_arrival = visits[(q + 1) % len(visits)]
            edges.append((HalfEdge(letter, arrival + 1), HalfEdge(nxt_letter, nxt_arrival)))
    g = FourRegularGraph(vertices, tuple(edges))
    c = tracing.euler_system_from_transversal(g, Transversal.uniform(vertices, 0))
    return g, c


def family_from_euler_system(c: EulerSystem) -> DowFamily:
    """One canonical word per circuit, in component order."""
    g = c.graph
    order = {v: i for i, component in enumerate(g.components) for v in component}
    words = [canonical_word(w) for w in c.words()]
    words.sort(key=lambda w: order[w[0]])
    return DowFamily(tuple(words))
