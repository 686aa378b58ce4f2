"""File format adapters."""

from .dow_text import DowTextCodec
from .factory import CODEC_REGISTRY, codec_for_path, get_codec, list_codecs, register_codec
from .graph_text import GraphTextCodec
from .matroid_dump import MatroidDumpCodec, parse_label
from .pd_text import PlanarDiagramCodec
from .polynomial_json import PolynomialJsonCodec
from .ribbon_text import RibbonTextCodec
from .weights_yaml import WeightsYamlCodec

__all__ = [
    "CODEC_REGISTRY",
    "DowTextCodec",
    "GraphTextCodec",
    "MatroidDumpCodec",
    "PlanarDiagramCodec",
    "PolynomialJsonCodec",
    "RibbonTextCodec",
    "WeightsYamlCodec",
    "codec_for_path",
    "get_codec",
    "list_codecs",
    "parse_label",
    "register_codec",
]
