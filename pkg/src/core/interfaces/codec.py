"""Abstract interface for text and JSON file formats."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, Iterator, Tuple, TypeVar, Union

from ..exceptions import InputError

T = TypeVar("T")


class FormatCodec(ABC, Generic[T]):
    """
    Abstract base class for format codecs.

    Each implementation reads and writes one value type in one text format.
    Decoding failures raise ``InputError`` with a line number as location.
    """

    @property
    @abstractmethod
    def format_name(self) -> str:
        """Registry key, e.g. ``frg``."""
        pass

    @property
    @abstractmethod
    def file_extension(self) -> str:
        """Return the file extension for this format."""
        pass

    @abstractmethod
    def decode(self, text: str) -> T:
        """
        Parse text into a value.

        Args:
            text: Full file contents

        Returns:
            The decoded value

        Raises:
            InputError: On malformed input
        """
        pass

    @abstractmethod
    def encode(self, value: T) -> str:
        """Serialize a value; ``decode(encode(v))`` equals ``v``."""
        pass

    def read(self, path: Union[str, Path]) -> T:
        """Decode a file, turning I/O failures into ``InputError``."""
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror or e}", location=str(path)) from e
        return self.decode(text)

    def write(self, value: T, path: Union[str, Path]) -> Path:
        output = Path(path)
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(self.encode(value), encoding="utf-8")
        return output


def content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """Yield ``(line_number, stripped_line)`` skipping blanks and ``#`` comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line
