"""Double occurrence word text format."""

from ...core.entities import DowFamily
from ...core.interfaces import FormatCodec, content_lines
from ...core.services.words import parse_dow


class DowTextCodec(FormatCodec[DowFamily]):
    """Letters separated by whitespace, words by ``;`` or by line breaks."""

    @property
    def format_name(self) -> str:
        return "dow"

    @property
    def file_extension(self) -> str:
        return ".dow"

    def decode(self, text: str) -> DowFamily:
        return parse_dow(" ; ".join(line for _, line in content_lines(text)))

    def encode(self, value: DowFamily) -> str:
        return f"{value}\n"
