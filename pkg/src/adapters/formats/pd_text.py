"""Planar diagram code text format."""

from typing import List, Optional

from ...core.entities import PlanarDiagramCode
from ...core.exceptions import InputError
from ...core.interfaces import FormatCodec, content_lines


def _header_value(number: int, line: str) -> int:
    value = line.partition(":")[2].strip()
    try:
        return int(value)
    except ValueError:
        raise InputError(f"line {number}: expected an integer, got {value!r}", location=number) from None


class PlanarDiagramCodec(FormatCodec[PlanarDiagramCode]):
    """
    One ``X a b c d`` line per crossing.

    Optional headers: ``writhe: k`` and ``loops: k`` (crossingless components).
    """

    @property
    def format_name(self) -> str:
        return "pd"

    @property
    def file_extension(self) -> str:
        return ".pd"

    def decode(self, text: str) -> PlanarDiagramCode:
        crossings: List[tuple] = []
        writhe: Optional[int] = None
        loops = 0
        for number, line in content_lines(text):
            if line.startswith("writhe:"):
                writhe = _header_value(number, line)
                continue
            if line.startswith("loops:"):
                loops = _header_value(number, line)
                continue
            tokens = line.split()
            if tokens[0] != "X" or len(tokens) != 5:
                raise InputError(f"line {number}: expected 'X a b c d'", location=number)
            try:
                crossings.append(tuple(int(t) for t in tokens[1:]))
            except ValueError:
                raise InputError(f"line {number}: arc labels must be integers", location=number) from None
        return PlanarDiagramCode(tuple(crossings), free_loops=loops, writhe=writhe)

    def encode(self, value: PlanarDiagramCode) -> str:
        lines = []
        if value.writhe is not None:
            lines.append(f"writhe: {value.writhe}")
        if value.free_loops:
            lines.append(f"loops: {value.free_loops}")
        lines += ["X " + " ".join(str(a) for a in c) for c in value.crossings]
        return "\n".join(lines) + "\n"
