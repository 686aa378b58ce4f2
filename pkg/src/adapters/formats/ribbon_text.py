"""Ribbon graph text format."""

from typing import Dict, List, Tuple

from ...core.entities import RibbonGraph
from ...core.exceptions import InputError
from ...core.interfaces import FormatCodec, content_lines

_SIGNS = {"+1": 1, "1": 1, "+": 1, "-1": -1, "-": -1}


class RibbonTextCodec(FormatCodec[RibbonGraph]):
    """
    ``v <name>: h1 h2 ... hk`` rotation lines and ``e <name> <h> <h> <±1>`` edge lines.

    A vertex line with nothing after the colon is an isolated vertex.
    """

    @property
    def format_name(self) -> str:
        return "ribbon"

    @property
    def file_extension(self) -> str:
        return ".rbn"

    def decode(self, text: str) -> RibbonGraph:
        rotation: Dict[str, List[str]] = {}
        edges: List[Tuple[str, str, str, int]] = []
        for number, line in content_lines(text):
            kind, _, rest = line.partition(" ")
            if kind == "v":
                name, colon, cycle = rest.partition(":")
                name = name.strip()
                if not colon or not name:
                    raise InputError(f"line {number}: expected 'v <name>: h1 h2 ...'", location=number)
                if name in rotation:
                    raise InputError(f"line {number}: vertex {name!r} declared twice", location=number)
                rotation[name] = cycle.split()
            elif kind == "e":
                tokens = rest.split()
                if len(tokens) != 4 or tokens[3] not in _SIGNS:
                    raise InputError(f"line {number}: expected 'e <name> <h> <h> <+1|-1>'", location=number)
                edges.append((tokens[0], tokens[1], tokens[2], _SIGNS[tokens[3]]))
            else:
                raise InputError(f"line {number}: unknown record {kind!r}", location=number)
        return RibbonGraph.from_mapping(rotation, edges)

    def encode(self, value: RibbonGraph) -> str:
        lines = [f"v {v}: {' '.join(r)}".rstrip() for v, r in zip(value.vertices, value.rotation)]
        lines += [f"e {e.name} {e.first} {e.second} {e.sign:+d}" for e in value.edges]
        return "\n".join(lines) + "\n"
