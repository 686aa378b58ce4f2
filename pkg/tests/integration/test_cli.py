"""Integration tests for the transmat command line."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.adapters.formats import CODEC_REGISTRY, GraphTextCodec, MatroidDumpCodec, register_codec
from src.core.algebra import SparsePoly
from src.core.algebra.polynomial import ZETA
from src.core.services.transition_matroid import graph_matroid
from src.presentation.cli.app import cli

from ..corpus import ABAB_FRG, graph_from_text

GOLDEN = Path(__file__).resolve().parent.parent / "golden"
INPUTS = GOLDEN / "inputs"
EXPECTED = GOLDEN / "expected"


def golden_input(name: str) -> str:
    return str(INPUTS / name)


# (expected file, argv); argv names input files relative to golden/inputs
TEXT_CASES = [
    ("validate.out", ["validate", "abab.frg"]),
    ("euler.out", ["euler", "abab.frg"]),
    ("interlace.out", ["interlace", "abab.frg"]),
    ("rank.out", ["rank", "abab.frg", "--transversal", "22"]),
    ("martin.out", ["martin", "abab.frg"]),
    ("martin.out", ["martin", "abab.frg", "--via", "both"]),
    ("martin_directed.out", ["martin", "abab.frg", "--directed"]),
    ("transition_poly.out", ["transition-poly", "abab.frg"]),
    ("transition_poly_weighted.out", ["transition-poly", "abab.frg", "--weights", "weights.yaml", "--y", "2"]),
    ("interlace_poly.out", ["interlace-poly", "abab.frg"]),
    ("dual_pair.out", ["dual-pair", "abab.frg", "--t1", "01", "--t2", "10"]),
    ("planar.out", ["planar", "abab.frg"]),
    ("detach.out", ["detach", "abab.frg", "--transition", "a:t0"]),
    ("sum.out", ["sum", "abab.frg", "loop.frg", "--edge1", "a.1", "b.0", "--edge2", "v.0", "v.1"]),
    ("separate.out", ["separate", "sum.frg", "--edge", "a.1", "v.0", "--edge", "b.0", "v.1"]),
    (
        "mutate.out",
        [
            "mutate", "mutation.frg",
            "--edge", "a.1", "d.0", "--edge", "b.0", "c.1",
            "--edge", "a.2", "d.3", "--edge", "b.3", "c.2",
        ],
    ),
    ("medial.out", ["medial", "loop.rbn"]),
    ("surface.out", ["surface", "torus.rbn"]),
    ("ribbon_br.out", ["ribbon-br", "loop.rbn"]),
    ("ribbon_dual.out", ["ribbon-dual", "loop.rbn"]),
    ("bracket.out", ["bracket", "kink.pd"]),
    ("bracket_normalized.out", ["bracket", "kink.pd", "--normalize"]),
    ("dow_canonical.out", ["dow", "canonical", "abcabc.dow"]),
    ("dow_equivalent.out", ["dow", "equivalent", "abcabc.dow", "cbacba.dow"]),
    ("dow_interlace.out", ["dow", "interlace", "abcabc.dow"]),
    ("dow_graph.out", ["dow", "graph", "abcabc.dow"]),
    ("dow_turnaround.out", ["dow", "turnaround", "turnaround.dow", "--letters", "a,b"]),
]

JSON_CASES = [
    ("transversals.json", ["transversals", "abab.frg"]),
    ("touch.json", ["touch", "abab.frg", "--transversal", "22"]),
    ("martin.json", ["martin", "abab.frg"]),
    ("surface.json", ["surface", "torus.rbn"]),
]


def resolve(argv):
    return [golden_input(a) if (INPUTS / a).is_file() else a for a in argv]


@pytest.fixture
def runner():
    return CliRunner()


class TestGolden:
    """Golden input/output pairs for every subcommand."""

    @pytest.mark.parametrize("expected, argv", TEXT_CASES)
    def test_text_output(self, runner, expected, argv):
        """Test human-readable output against the golden file."""
        result = runner.invoke(cli, resolve(argv))

        assert result.exit_code == 0, result.output
        assert result.output == (EXPECTED / expected).read_text(encoding="utf-8")

    @pytest.mark.parametrize("expected, argv", JSON_CASES)
    def test_json_output(self, runner, expected, argv):
        """Test --json output against the golden JSON."""
        result = runner.invoke(cli, ["--json"] + resolve(argv))

        assert result.exit_code == 0, result.output
        assert json.loads(result.output) == json.loads((EXPECTED / expected).read_text(encoding="utf-8"))

    def test_matroid_dump_round_trips(self, runner, abab):
        """Test that the matroid dump decodes to the same matroid."""
        result = runner.invoke(cli, ["matroid", golden_input("abab.frg")])

        assert result.exit_code == 0, result.output
        m = MatroidDumpCodec().decode(result.output)
        assert m.same_rank_function(graph_matroid(abab))

    def test_matroid_json(self, runner):
        """Test the JSON form of the matroid dump."""
        result = runner.invoke(cli, ["--json", "matroid", golden_input("abab.frg")])

        payload = json.loads(result.output)
        assert len(payload["ground"]) == 6
        assert len(payload["rows"]) == 2

    def test_graph_json_round_trips(self, runner):
        """Test that a --json graph decodes to the printed graph."""
        argv = ["detach", golden_input("abab.frg"), "--transition", "a:t0"]
        text = runner.invoke(cli, argv).output
        payload = json.loads(runner.invoke(cli, ["--json"] + argv).output)

        assert payload["vertices"] == ["b"]
        assert graph_from_text(text).to_dict() == payload

    def test_routes_never_disagree(self, runner):
        """Test that --via both succeeds on every golden graph."""
        for name in ("abab.frg", "loop.frg", "sum.frg", "mutation.frg", "abcabc.dow"):
            result = runner.invoke(cli, ["martin", golden_input(name), "--via", "both"])
            assert result.exit_code == 0, result.output


class TestExitCodes:
    """Tests for the error to exit code mapping."""

    def test_missing_file(self, runner, temp_dir):
        """Test that an unreadable input exits 1."""
        result = runner.invoke(cli, ["euler", str(temp_dir / "missing.frg")])

        assert result.exit_code == 1
        assert "error:" in result.output

    def test_invalid_graph(self, runner):
        """Test that validate reports the problem and exits 1."""
        result = runner.invoke(cli, ["validate", golden_input("invalid.frg")])

        assert result.exit_code == 1
        assert result.output.startswith("invalid:")

    def test_invalid_graph_json(self, runner):
        """Test the JSON validation report."""
        result = runner.invoke(cli, ["--json", "validate", golden_input("invalid.frg")])

        payload = json.loads(result.output)
        assert result.exit_code == 1
        assert payload["ok"] is False
        assert payload["problem"] == "unused_slot"

    @pytest.mark.parametrize(
        "argv",
        [
            ["martin", "abab.frg", "--bogus"],
            ["--bogus", "martin", "abab.frg"],
            ["martin", "abab.frg", "--via", "sideways"],
            ["rank", "abab.frg"],
            ["dow", "canonical", "abcabc.dow", "--bogus"],
            ["no-such-command"],
        ],
    )
    def test_usage_errors(self, runner, argv):
        """Test that option mistakes exit 1, leaving 2 for exhausted caps."""
        result = runner.invoke(cli, resolve(argv))

        assert result.exit_code == 1
        assert "Error" in result.output

    def test_bad_transversal(self, runner):
        """Test a digit string of the wrong length."""
        result = runner.invoke(cli, ["rank", golden_input("abab.frg"), "--transversal", "012"])

        assert result.exit_code == 1

    def test_unknown_weight_vertex(self, runner, temp_dir):
        """Test weights naming a vertex that is not in the graph."""
        weights = temp_dir / "weights.yaml"
        weights.write_text("z:t0: 2\n", encoding="utf-8")

        result = runner.invoke(cli, ["transition-poly", golden_input("abab.frg"), "--weights", str(weights)])

        assert result.exit_code == 1

    def test_separate_needs_two_edges(self, runner):
        """Test the --edge count check."""
        result = runner.invoke(cli, ["separate", golden_input("sum.frg"), "--edge", "a.1", "v.0"])

        assert result.exit_code == 1

    def test_planarity_budget(self, runner, k5, temp_dir):
        """Test that an exhausted orbit search exits 2."""
        path = GraphTextCodec().write(k5, temp_dir / "k5.frg")

        result = runner.invoke(cli, ["planar", str(path), "--cap", "1"])

        assert result.exit_code == 2
        assert "budget_exceeded" in result.output

    def test_configured_budget(self, runner):
        """Test that a config file cap exits 2 and names the limit."""
        result = runner.invoke(cli, ["-c", golden_input("budget.yaml"), "bracket", golden_input("trefoil.pd")])

        assert result.exit_code == 2
        assert "limit 2" in result.output

    def test_missing_config(self, runner, temp_dir):
        """Test a config path that does not exist."""
        result = runner.invoke(cli, ["-c", str(temp_dir / "nope.yaml"), "validate", golden_input("abab.frg")])

        assert result.exit_code == 1

    def test_consistency_failure(self, runner, mocker):
        """Test that disagreeing Martin routes exit 3."""
        mocker.patch(
            "src.core.services.polynomials.martin_via_matroid",
            return_value=SparsePoly.variable(ZETA),
        )

        result = runner.invoke(cli, ["martin", golden_input("abab.frg"), "--via", "both"])

        assert result.exit_code == 3
        assert "error:" in result.output

    def test_workers_option(self, runner):
        """Test that threaded enumeration prints the same table."""
        single = runner.invoke(cli, ["--json", "transversals", golden_input("abab.frg")])
        threaded = runner.invoke(cli, ["--json", "-w", "3", "transversals", golden_input("abab.frg")])

        assert threaded.exit_code == 0
        assert json.loads(threaded.output) == json.loads(single.output)


class TestInputFormats:
    """Tests for picking the input codec by file extension."""

    def test_diagram_as_graph(self, runner):
        """Test that a diagram file is read as its crossing graph."""
        result = runner.invoke(cli, ["validate", golden_input("trefoil.pd")])

        assert result.exit_code == 0
        assert result.output == "ok\n"

    def test_unknown_extension_is_graph_text(self, runner, abab, temp_dir):
        """Test the graph text fallback for unregistered extensions."""
        path = temp_dir / "abab.txt"
        path.write_text(GraphTextCodec().encode(abab), encoding="utf-8")

        result = runner.invoke(cli, ["martin", str(path)])

        assert result.output == "3ζ+3\n"

    def test_wrong_kind_of_file(self, runner):
        """Test a graph file where a ribbon graph is expected."""
        result = runner.invoke(cli, ["surface", golden_input("abab.frg")])

        assert result.exit_code == 1
        assert "error:" in result.output

    def test_registered_codec(self, runner, abab, temp_dir, mocker):
        """Test that a codec added to the registry is used for its extension."""

        class FourRegularCodec(GraphTextCodec):
            @property
            def file_extension(self) -> str:
                return ".4reg"

        mocker.patch.dict(CODEC_REGISTRY)
        register_codec("4reg", FourRegularCodec)
        path = FourRegularCodec().write(abab, temp_dir / "abab.4reg")

        result = runner.invoke(cli, ["euler", str(path)])

        assert result.exit_code == 0
        assert result.output == (EXPECTED / "euler.out").read_text(encoding="utf-8")


def test_golden_graph_matches_corpus():
    """Test that the golden abab file is the corpus graph."""
    assert graph_from_text((INPUTS / "abab.frg").read_text(encoding="utf-8")) == graph_from_text(ABAB_FRG)
