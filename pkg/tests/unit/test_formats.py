"""Tests for file format codecs."""

import pytest

from src.adapters.formats import (
    CODEC_REGISTRY,
    codec_for_path,
    get_codec,
    list_codecs,
    register_codec,
)
from src.adapters.formats.dow_text import DowTextCodec
from src.adapters.formats.graph_text import GraphTextCodec
from src.adapters.formats.matroid_dump import MatroidDumpCodec, parse_label
from src.adapters.formats.pd_text import PlanarDiagramCodec
from src.adapters.formats.polynomial_json import PolynomialJsonCodec
from src.adapters.formats.ribbon_text import RibbonTextCodec
from src.adapters.formats.weights_yaml import WeightsYamlCodec
from src.core.algebra import SparsePoly
from src.core.entities import LabelKind, PlanarDiagramCode, Transition, TransitionGroundLabel
from src.core.exceptions import InputError
from src.core.interfaces import content_lines
from src.core.services.transition_matroid import graph_matroid

from ..corpus import ABAB_FRG, ribbon_torus


class TestContentLines:
    """Tests for the shared line reader."""

    def test_skips_blanks_and_comments(self):
        """Test that line numbers survive skipped lines."""
        text = "# header\n\nv a\n   \n  e a.0 a.1  \n"

        assert list(content_lines(text)) == [(3, "v a"), (5, "e a.0 a.1")]


class TestGraphText:
    """Tests for the .frg codec."""

    def test_decode(self, abab):
        """Test the abab file."""
        g = GraphTextCodec().decode(ABAB_FRG)

        assert g == abab
        assert g.vertices == ("a", "b")

    def test_encode_decode(self, corpus):
        """Test that encoding keeps vertex order and edges."""
        codec = GraphTextCodec()
        for g in corpus.values():
            assert codec.decode(codec.encode(g)) == g

    def test_slot_problems_pass_through(self):
        """Test that unused slots are left for validation."""
        g = GraphTextCodec().decode("v a\ne a.0 a.1\n")

        assert not g.check().ok

    @pytest.mark.parametrize(
        "text, line",
        [
            ("v a\nv a\n", 2),
            ("v a b\n", 1),
            ("v a\n\ne a.0\n", 3),
            ("v a\ne a.0 a.x\n", 2),
            ("v a\n# note\nz a\n", 3),
        ],
    )
    def test_errors_name_the_line(self, text, line):
        """Test that decode errors carry the line number."""
        with pytest.raises(InputError) as info:
            GraphTextCodec().decode(text)

        assert info.value.location == line
        assert f"line {line}" in str(info.value)

    def test_read_missing_file(self, temp_dir):
        """Test that I/O failures become input errors."""
        with pytest.raises(InputError):
            GraphTextCodec().read(temp_dir / "missing.frg")

    def test_write_and_read(self, abab, temp_dir):
        """Test a file round trip, creating parent directories."""
        codec = GraphTextCodec()

        path = codec.write(abab, temp_dir / "out" / "abab.frg")

        assert path.exists()
        assert codec.read(path) == abab


class TestDowText:
    """Tests for the word codec."""

    def test_lines_are_words(self):
        """Test that line breaks separate words."""
        f = DowTextCodec().decode("a b a b\n# second\nc c\n")

        assert f.words == (("a", "b", "a", "b"), ("c", "c"))

    def test_encode(self):
        """Test the one-line form."""
        codec = DowTextCodec()

        assert codec.encode(codec.decode("a b a b ; c c")) == "a b a b ; c c\n"


class TestPlanarDiagramText:
    """Tests for the planar diagram codec."""

    TREFOIL = "writhe: -3\nX 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n"

    def test_decode(self):
        """Test headers and crossings."""
        pd = PlanarDiagramCodec().decode(self.TREFOIL)

        assert pd.n == 3
        assert pd.writhe == -3
        assert pd.crossings[0] == (1, 5, 2, 4)

    def test_free_loops(self):
        """Test the loops header on its own."""
        pd = PlanarDiagramCodec().decode("loops: 2\n")

        assert pd == PlanarDiagramCode((), free_loops=2)

    def test_encode(self):
        """Test that encoding writes the headers first."""
        codec = PlanarDiagramCodec()

        assert codec.encode(codec.decode(self.TREFOIL)) == self.TREFOIL

    @pytest.mark.parametrize(
        "text, line",
        [
            ("writhe: many\n", 1),
            ("X 1 1 2\n", 1),
            ("X 1 1 2 2\nY 3 3 4 4\n", 2),
            ("X 1 1 a 2\n", 1),
        ],
    )
    def test_errors_name_the_line(self, text, line):
        """Test the line numbers of bad records."""
        with pytest.raises(InputError) as info:
            PlanarDiagramCodec().decode(text)

        assert info.value.location == line

    def test_arc_used_three_times(self):
        """Test that the code itself is validated."""
        with pytest.raises(InputError):
            PlanarDiagramCodec().decode("X 1 1 1 2\n")


class TestRibbonText:
    """Tests for the ribbon graph codec."""

    def test_round_trip(self):
        """Test the torus file."""
        codec = RibbonTextCodec()
        g = ribbon_torus()

        text = codec.encode(g)

        assert "e e1 h1 h3 +1" in text
        assert codec.decode(text) == g

    def test_isolated_vertex(self):
        """Test a vertex line with an empty rotation."""
        g = RibbonTextCodec().decode("v u:\nv w: h k\ne f h k -1\n")

        assert g.isolated_vertices() == ["u"]
        assert g.edges[0].sign == -1

    @pytest.mark.parametrize(
        "text, line",
        [
            ("v u h k\n", 1),
            ("v u: h k\nv u: p q\n", 2),
            ("v u: h k\ne f h k 2\n", 2),
            ("v u: h k\nx f\n", 2),
        ],
    )
    def test_errors_name_the_line(self, text, line):
        """Test the line numbers of bad records."""
        with pytest.raises(InputError) as info:
            RibbonTextCodec().decode(text)

        assert info.value.location == line


class TestMatroidDump:
    """Tests for the matroid dump."""

    def test_round_trip(self, abab):
        """Test that transition labels come back typed."""
        codec = MatroidDumpCodec()
        m = graph_matroid(abab)

        back = codec.decode(codec.encode(m))

        assert back.ground == m.ground
        assert back.same_rank_function(m)

    def test_parse_label(self):
        """Test typed and plain labels."""
        label = parse_label("χa=t1")

        assert label == TransitionGroundLabel("a", 1)
        assert label.kind is LabelKind.CHI
        assert parse_label("e7") == "e7"

    def test_missing_header(self):
        """Test that the ground header is required."""
        with pytest.raises(InputError):
            MatroidDumpCodec().decode("0101\n")

    def test_bad_row(self):
        """Test a row of the wrong length."""
        with pytest.raises(InputError) as info:
            MatroidDumpCodec().decode("ground: p q r\n101\n10\n")

        assert info.value.location == 3


class TestPolynomialJson:
    """Tests for the polynomial JSON codec."""

    def test_round_trip(self):
        """Test a two-variable polynomial."""
        x = SparsePoly.variable("x")
        y = SparsePoly.variable("y")
        codec = PolynomialJsonCodec()
        p = x ** 2 + 3 * x * y - 1

        assert codec.decode(codec.encode(p)) == p

    def test_terms_are_sorted(self):
        """Test the sorted term list."""
        p = SparsePoly.variable("y") ** 2 + 1

        assert PolynomialJsonCodec().encode(p) == '{"vars": ["y"], "terms": [[1, [0]], [1, [2]]]}\n'

    @pytest.mark.parametrize("text", ["{", "[1, 2]", '{"vars": ["x"]}'])
    def test_rejects(self, text):
        """Test malformed JSON and wrong shapes."""
        with pytest.raises(InputError):
            PolynomialJsonCodec().decode(text)


class TestWeightsYaml:
    """Tests for transition weight files."""

    def test_decode(self):
        """Test integers, variables and negated variables."""
        weights = WeightsYamlCodec().decode("a:t0: 3\nb:t1: w\nb:t2: -w\n")
        w = SparsePoly.variable("w")

        assert weights == {Transition("a", 0): 3, Transition("b", 1): w, Transition("b", 2): -w}

    def test_empty_file(self):
        """Test that an empty file means no weights."""
        assert WeightsYamlCodec().decode("") == {}

    def test_round_trip(self):
        """Test that polynomial weights survive encoding."""
        codec = WeightsYamlCodec()
        weights = {Transition("a", 0): 2, Transition("a", 1): SparsePoly.variable("u") + 1}

        assert codec.decode(codec.encode(weights)) == weights

    @pytest.mark.parametrize("text", ["a:t3: 1\n", "a:t0: true\n", "a:t0: 1.5\n", "- a\n", "a: [1\n"])
    def test_rejects(self, text):
        """Test bad keys, bad weights and bad YAML."""
        with pytest.raises(InputError):
            WeightsYamlCodec().decode(text)


class TestRegistry:
    """Tests for the codec factory."""

    def test_known_formats(self):
        """Test every registered name resolves to a codec of that name."""
        for name in list_codecs():
            assert get_codec(name).format_name == name

    def test_case_insensitive(self):
        """Test upper-case format names."""
        assert isinstance(get_codec("FRG"), GraphTextCodec)

    def test_unknown_format(self):
        """Test an unknown name."""
        assert get_codec("gml") is None

    def test_codec_for_path(self):
        """Test lookup by extension."""
        assert isinstance(codec_for_path("knots/trefoil.pd"), PlanarDiagramCodec)
        assert isinstance(codec_for_path("surface.RBN"), RibbonTextCodec)
        assert codec_for_path("notes.txt") is None

    def test_register_codec(self, mocker):
        """Test adding a custom codec."""
        mocker.patch.dict(CODEC_REGISTRY)

        register_codec("Graph", GraphTextCodec)

        assert isinstance(get_codec("graph"), GraphTextCodec)
