"""Abstract interfaces for transmat components."""

from .codec import FormatCodec, content_lines

__all__ = [
    "FormatCodec",
    "content_lines",
]
