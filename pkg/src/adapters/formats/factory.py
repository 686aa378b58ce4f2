"""Codec factory: format name -> codec."""

from typing import Dict, List, Optional, Type

from ...core.interfaces import FormatCodec
from .dow_text import DowTextCodec
from .graph_text import GraphTextCodec
from .matroid_dump import MatroidDumpCodec
from .pd_text import PlanarDiagramCodec
from .polynomial_json import PolynomialJsonCodec
from .ribbon_text import RibbonTextCodec
from .weights_yaml import WeightsYamlCodec


# Registry of available codecs
CODEC_REGISTRY: Dict[str, Type[FormatCodec]] = {
    "frg": GraphTextCodec,
    "dow": DowTextCodec,
    "pd": PlanarDiagramCodec,
    "ribbon": RibbonTextCodec,
    "matroid": MatroidDumpCodec,
    "poly-json": PolynomialJsonCodec,
    "weights": WeightsYamlCodec,
}


def get_codec(format_name: str) -> Optional[FormatCodec]:
    """
    Get a codec instance by format name.

    Args:
        format_name: Registry key, case-insensitive

    Returns:
        Codec instance or None if the format is unknown
    """
    codec_class = CODEC_REGISTRY.get(format_name.lower())
    return codec_class() if codec_class else None


def codec_for_path(path: str) -> Optional[FormatCodec]:
    """The first registered codec whose extension matches ``path``."""
    for codec_class in CODEC_REGISTRY.values():
        codec = codec_class()
        if path.lower().endswith(codec.file_extension):
            return codec
    return None


def list_codecs() -> List[str]:
    """List all available format names."""
    return list(CODEC_REGISTRY.keys())


def register_codec(format_name: str, codec_class: Type[FormatCodec]) -> None:
    """Register a custom codec."""
    CODEC_REGISTRY[format_name.lower()] = codec_class
