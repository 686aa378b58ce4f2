"""Double occurrence words."""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ..exceptions import InputError

Word = Tuple[str, ...]


@dataclass(frozen=True)
class DowFamily:
    """
    A disjoint family of double occurrence words.

    Attributes:
        words: Letter sequences; every letter occurs exactly twice, both in one word
    """

    words: Tuple[Word, ...]

    def __post_init__(self) -> None:
        words = tuple(tuple(w) for w in self.words)
        object.__setattr__(self, "words", words)
        home: Dict[str, int] = {}
        for i, word in enumerate(words):
            if not word:
                raise InputError(f"word {i} is empty")
            for letter, count in Counter(word).items():
                if letter in home:
                    raise InputError(
                        f"letter {letter!r} appears in words {home[letter]} and {i}", location=letter
                    )
                if count != 2:
                    raise InputError(
                        f"letter {letter!r} occurs {count} times, expected 2", location=letter
                    )
                home[letter] = i

    @classmethod
    def single(cls, word: Sequence[str]) -> "DowFamily":
        return cls((tuple(word),))

    @property
    def letters(self) -> List[str]:
        """Letters in order of first occurrence."""
        seen: List[str] = []
        for word in self.words:
            for letter in word:
                if letter not in seen:
                    seen.append(letter)
        return seen

    def word_of(self, letter: str) -> int:
        for i, word in enumerate(self.words):
            if letter in word:
                return i
        raise InputError(f"unknown letter {letter!r}", location=letter)

    def __len__(self) -> int:
        return len(self.words)

    def __str__(self) -> str:
        return " ; ".join(" ".join(word) for word in self.words)

    def to_dict(self) -> Dict[str, List[List[str]]]:
        return {"words": [list(w) for w in self.words]}
