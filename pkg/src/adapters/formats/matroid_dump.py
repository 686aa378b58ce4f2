"""Matroid dump format: a ``ground:`` header, then representation rows as 0/1 strings."""

import re
from typing import Hashable, List

from ...core.algebra import BinaryMatroid
from ...core.entities import LabelKind, TransitionGroundLabel
from ...core.exceptions import InputError
from ...core.interfaces import FormatCodec, content_lines

_LABEL = re.compile(r"^([φχψ])(.+)=t([012])$")
_KINDS = {kind.value: kind for kind in LabelKind}


def parse_label(token: str) -> Hashable:
    """Transition labels such as ``χa=t1`` come back typed; anything else stays a string."""
    match = _LABEL.match(token)
    if not match:
        return token
    kind, vertex, pairing = match.groups()
    return TransitionGroundLabel(vertex, int(pairing), _KINDS[kind])


class MatroidDumpCodec(FormatCodec[BinaryMatroid]):
    """Labels must not contain whitespace."""

    @property
    def format_name(self) -> str:
        return "matroid"

    @property
    def file_extension(self) -> str:
        return ".mat"

    def decode(self, text: str) -> BinaryMatroid:
        lines = list(content_lines(text))
        if not lines or not lines[0][1].startswith("ground:"):
            raise InputError("matroid dump must start with a 'ground:' header", location=1)
        ground = [parse_label(t) for t in lines[0][1][len("ground:"):].split()]
        rows: List[str] = []
        for number, line in lines[1:]:
            if len(line) != len(ground) or set(line) - {"0", "1"}:
                raise InputError(
                    f"line {number}: expected a 0/1 row of length {len(ground)}", location=number
                )
            rows.append(line)
        return BinaryMatroid.from_rows(ground, rows)

    def encode(self, value: BinaryMatroid) -> str:
        lines = ["ground: " + " ".join(str(label) for label in value.ground)]
        lines += value.rep.to_strings()
        return "\n".join(lines) + "\n"
