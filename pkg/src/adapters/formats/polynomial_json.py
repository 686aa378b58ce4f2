"""Polynomial JSON format."""

import json

from ...core.algebra import SparsePoly
from ...core.exceptions import InputError
from ...core.interfaces import FormatCodec


class PolynomialJsonCodec(FormatCodec[SparsePoly]):
    """``{"vars": [...], "terms": [[coeff, [e1, e2, ...]], ...]}`` sorted by exponent vector."""

    @property
    def format_name(self) -> str:
        return "poly-json"

    @property
    def file_extension(self) -> str:
        return ".json"

    def decode(self, text: str) -> SparsePoly:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"invalid JSON: {e.msg}", location=e.lineno) from e
        if not isinstance(data, dict):
            raise InputError("polynomial JSON must be an object")
        return SparsePoly.from_dict(data)

    def encode(self, value: SparsePoly) -> str:
        return json.dumps(value.to_dict(), ensure_ascii=False) + "\n"
