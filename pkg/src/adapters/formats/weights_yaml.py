"""Transition weight files for the transition polynomial."""

import re
from typing import Any, Dict, Mapping

import yaml

from ...core.algebra import SparsePoly
from ...core.entities import Transition
from ...core.exceptions import InputError
from ...core.interfaces import FormatCodec
from ...core.services.polynomials import Weight

_VARIABLE = re.compile(r"^(-?)([A-Za-z_][A-Za-z0-9_]*)$")


def _weight(key: str, raw: Any) -> Weight:
    if isinstance(raw, bool):
        raise InputError(f"weight of {key} must be a number or a variable, got {raw!r}", location=key)
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        match = _VARIABLE.match(raw.strip())
        if match:
            sign, name = match.groups()
            return -SparsePoly.variable(name) if sign else SparsePoly.variable(name)
    if isinstance(raw, dict):
        return SparsePoly.from_dict(raw)
    raise InputError(f"weight of {key} must be an integer, a variable name or a polynomial", location=key)


class WeightsYamlCodec(FormatCodec[Dict[Transition, Weight]]):
    """
    A YAML mapping from ``<vertex>:t<p>`` to a weight.

    Weights are integers, variable names (optionally negated, e.g. ``-w``)
    or polynomial objects in the polynomial JSON shape.
    """

    @property
    def format_name(self) -> str:
        return "weights"

    @property
    def file_extension(self) -> str:
        return ".yaml"

    def decode(self, text: str) -> Dict[Transition, Weight]:
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise InputError(f"invalid YAML: {e}") from e
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise InputError("weights file must be a mapping of transitions to weights")
        return {Transition.parse(str(key)): _weight(str(key), raw) for key, raw in data.items()}

    def encode(self, value: Mapping[Transition, Weight]) -> str:
        data = {
            str(t): w.to_dict() if isinstance(w, SparsePoly) else int(w)
            for t, w in sorted(value.items())
        }
        return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)
