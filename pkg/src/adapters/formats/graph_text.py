"""Graph text format (``.frg``)."""

from typing import List

from ...core.entities import Edge, FourRegularGraph, HalfEdge
from ...core.exceptions import InputError
from ...core.interfaces import FormatCodec, content_lines


class GraphTextCodec(FormatCodec[FourRegularGraph]):
    """
    One ``v <name>`` line per vertex and one ``e <name>.<slot> <name>.<slot>`` per edge.

    Vertex declaration order fixes vertex indices, and with them the digit
    order of transversal strings. The codec checks syntax only; slot usage
    is left to ``FourRegularGraph.check`` so that ``validate`` can report it.
    """

    @property
    def format_name(self) -> str:
        return "frg"

    @property
    def file_extension(self) -> str:
        return ".frg"

    def decode(self, text: str) -> FourRegularGraph:
        vertices: List[str] = []
        edges: List[Edge] = []
        for number, line in content_lines(text):
            tokens = line.split()
            kind = tokens[0]
            if kind == "v":
                if len(tokens) != 2:
                    raise InputError(f"line {number}: expected 'v <name>'", location=number)
                if tokens[1] in vertices:
                    raise InputError(f"line {number}: vertex {tokens[1]!r} declared twice", location=number)
                vertices.append(tokens[1])
            elif kind == "e":
                if len(tokens) != 3:
                    raise InputError(
                        f"line {number}: expected 'e <name>.<slot> <name>.<slot>'", location=number
                    )
                try:
                    edges.append((HalfEdge.parse(tokens[1]), HalfEdge.parse(tokens[2])))
                except InputError as e:
                    raise InputError(f"line {number}: {e}", location=number) from e
            else:
                raise InputError(f"line {number}: unknown record {kind!r}", location=number)
        return FourRegularGraph(tuple(vertices), tuple(edges))

    def encode(self, value: FourRegularGraph) -> str:
        lines = [f"v {v}" for v in value.vertices]
        lines += [f"e {a} {b}" for a, b in value.edges]
        return "\n".join(lines) + "\n"
