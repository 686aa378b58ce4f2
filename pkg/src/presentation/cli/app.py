"""Command line interface using Click."""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import click
from rich.console import Console
from rich.table import Table

from ...adapters.formats import (
    DowTextCodec,
    GraphTextCodec,
    MatroidDumpCodec,
    PlanarDiagramCodec,
    RibbonTextCodec,
    WeightsYamlCodec,
    codec_for_path,
)
from ...config import get_config, load_config
from ...core.algebra import SparsePoly
from ...core.entities import (
    DowFamily,
    Edge,
    FourRegularGraph,
    HalfEdge,
    PlanarDiagramCode,
    RibbonGraph,
    Transition,
)
from ...core.exceptions import BudgetExceeded, InputError, TransmatError
from ...core.interfaces import FormatCodec
from ...core.services import knots, moves, planarity, polynomials, ribbon, tracing, transition_matroid, words
from ...infrastructure.logging import LogConfig, RunContext, get_logger, setup_logging

logger = get_logger("cli")


@dataclass
class CliState:
    """
    Options shared by every subcommand of one invocation.

    Attributes:
        json_output: Print JSON instead of the human-readable form
        verbose: Debug logging and tracebacks on errors
        console: Rich console for stdout
        err_console: Rich console for stderr
    """

    json_output: bool = False
    verbose: bool = False
    console: Console = field(default_factory=lambda: Console(soft_wrap=True, highlight=False))
    err_console: Console = field(default_factory=lambda: Console(stderr=True, highlight=False))


USAGE_EXIT_CODE = InputError.exit_code


class TransmatGroup(click.Group):
    """
    Maps errors to exit codes: 1 input, 2 budget, 3 consistency.

    Click reports bad options with exit code 2; they are input errors here,
    so 2 always means a cap was hit.
    """

    def make_context(self, info_name: Optional[str], args: List[str], parent=None, **extra: Any) -> click.Context:
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = USAGE_EXIT_CODE
            raise

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = USAGE_EXIT_CODE
            raise
        except TransmatError as e:
            state = ctx.find_object(CliState) or CliState()
            message = str(e)
            if isinstance(e, BudgetExceeded) and e.limit is not None:
                message += f" (limit {e.limit}, needed {e.required})"
            state.err_console.print(f"[bold red]error:[/bold red] {message}", markup=True, highlight=False)
            if state.verbose:
                state.err_console.print_exception()
            ctx.exit(e.exit_code)


# -- input and output helpers -----------------------------------------------------


def _state(ctx: click.Context) -> CliState:
    return ctx.ensure_object(CliState)


def read_input(path: str, default: FormatCodec) -> Any:
    """Decode ``path`` with the codec registered for its extension, else ``default``."""
    codec = codec_for_path(path) or default
    logger.debug(f"reading {path} as {codec.format_name}")
    return codec.read(path)


def _read_as(path: str, expected: type, default: FormatCodec) -> Any:
    value = read_input(path, default)
    if not isinstance(value, expected):
        raise InputError(f"{path}: expected a {default.format_name} file, got {type(value).__name__}")
    return value


def read_graph(path: str) -> FourRegularGraph:
    """A word file stands for the graph its words record, a diagram for its crossing graph."""
    value = read_input(path, GraphTextCodec())
    if isinstance(value, DowFamily):
        g, _ = words.graph_from_family(value)
        return g
    if isinstance(value, PlanarDiagramCode):
        return knots.diagram_to_graph(value).graph
    if not isinstance(value, FourRegularGraph):
        raise InputError(f"{path}: expected a graph, word or diagram file, got {type(value).__name__}")
    return value


def read_ribbon(path: str) -> RibbonGraph:
    return _read_as(path, RibbonGraph, RibbonTextCodec())


def read_family(path: str) -> DowFamily:
    return _read_as(path, DowFamily, DowTextCodec())


def read_diagram(path: str) -> PlanarDiagramCode:
    return _read_as(path, PlanarDiagramCode, PlanarDiagramCodec())


def read_weights(path: str) -> Dict[Transition, Any]:
    return _read_as(path, dict, WeightsYamlCodec())


def parse_edge(pair: Sequence[str]) -> Edge:
    a, b = (HalfEdge.parse(p) for p in pair)
    return (a, b) if a <= b else (b, a)


def emit(ctx: click.Context, payload: Any, human: Callable[[Console], None]) -> None:
    """Print ``payload`` as JSON or call ``human`` with the stdout console."""
    state = _state(ctx)
    if state.json_output:
        click.echo(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        human(state.console)


def emit_text(ctx: click.Context, payload: Any, text: str) -> None:
    emit(ctx, payload, lambda console: click.echo(text, nl=not text.endswith("\n")))


def emit_poly(ctx: click.Context, p: SparsePoly) -> None:
    emit_text(ctx, p.to_dict(), p.pretty())


def emit_graph(ctx: click.Context, g: FourRegularGraph) -> None:
    emit_text(ctx, g.to_dict(), GraphTextCodec().encode(g))


# -- command group ----------------------------------------------------------------


@click.group(cls=TransmatGroup)
@click.option("--config", "-c", "config_path", type=click.Path(), help="YAML or JSON config file")
@click.option("--verbose", "-v", is_flag=True, help="Debug logging and full tracebacks")
@click.option("--json", "json_output", is_flag=True, help="Print JSON instead of text")
@click.option("--workers", "-w", type=click.IntRange(min=1), help="Worker threads for enumerations")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], verbose: bool, json_output: bool, workers: Optional[int]):
    """
    transmat - transition matroids of 4-regular graphs.

    Graphs are read from .frg files, or from .dow word and .pd diagram files;
    transversals are base-3 digit strings in vertex declaration order.
    """
    config = load_config(config_path) if config_path else get_config()
    if workers is not None:
        config.enumeration.workers = workers
    if verbose:
        config.enumeration.progress = True

    setup_logging(
        LogConfig(
            level="DEBUG" if verbose else config.logging.level,
            format=config.logging.format,
            file_path=Path(config.logging.file_path) if config.logging.file_path else None,
            max_file_size_mb=config.logging.max_file_size_mb,
            backup_count=config.logging.backup_count,
        )
    )
    run_id = ctx.with_resource(RunContext())
    ctx.obj = CliState(json_output=json_output, verbose=verbose)
    logger.debug(f"run {run_id}: {ctx.invoked_subcommand}")


# -- graph commands ----------------------------------------------------------------


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.pass_context
def validate(ctx: click.Context, graph_file: str):
    """Check that every slot of every vertex is used by exactly one edge."""
    report = tracing.validate(read_graph(graph_file))
    emit_text(ctx, report.to_dict(), "ok" if report.ok else f"invalid: {report.message}")
    if not report.ok:
        ctx.exit(InputError.exit_code)


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.pass_context
def euler(ctx: click.Context, graph_file: str):
    """Print an Euler system as its transversal and one word per component."""
    c = tracing.euler_system(read_graph(graph_file))
    family = words.family_from_euler_system(c)
    payload = {"transversal": c.transversal.digits, "words": family.to_dict()["words"]}
    emit_text(ctx, payload, f"transversal: {c.transversal.digits}\nwords: {family}")


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.option("--transversal", "-t", help="Euler system to read the interlacement from")
@click.pass_context
def interlace(ctx: click.Context, graph_file: str, transversal: Optional[str]):
    """Print the interlacement graph of an Euler system as adjacency lists."""
    g = read_graph(graph_file)
    if transversal:
        c = tracing.euler_system_from_transversal(g, tracing.parse_transversal(g, transversal))
    else:
        c = tracing.euler_system(g)
    h = tracing.interlacement(c)
    lines = [f"{v}: {' '.join(h.neighbors(v))}".rstrip() for v in h.vertices]
    emit_text(ctx, h.to_dict(), "\n".join(lines))


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.option("--transversal", "-t", required=True, help="Base-3 digits, one per vertex")
@click.pass_context
def rank(ctx: click.Context, graph_file: str, transversal: str):
    """Rank of a transversal in the transition matroid, with its circuit count."""
    g = read_graph(graph_file)
    t = tracing.parse_transversal(g, transversal)
    m = transition_matroid.graph_matroid(g)
    r = transition_matroid.rank_of_transversal(m, t)
    size = tracing.circuit_count(g, t)
    payload = {"transversal": t.digits, "rank": r, "circuits": size, "nullity": g.n - r}
    emit_text(ctx, payload, f"rank {r}, |P|={size}")


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.option("--directed", is_flag=True, help="Directed Martin polynomial of the Euler orientation")
@click.option("--via", type=click.Choice(["direct", "matroid", "both"]), default="direct", show_default=True)
@click.pass_context
def martin(ctx: click.Context, graph_file: str, directed: bool, via: str):
    """Martin polynomial in ζ; --via both exits 3 when the two routes disagree."""
    g = read_graph(graph_file)
    if directed:
        emit_poly(ctx, polynomials.directed_martin(g))
    else:
        emit_poly(ctx, polynomials.martin(g, via=via))


@cli.command("transition-poly")
@click.argument("graph_file", type=click.Path())
@click.option("--weights", "weights_file", type=click.Path(), help="YAML mapping <vertex>:t<p> -> weight")
@click.option("--y", "y_value", type=int, help="Substitute an integer for y")
@click.pass_context
def transition_poly(ctx: click.Context, graph_file: str, weights_file: Optional[str], y_value: Optional[int]):
    """Weighted transition polynomial Σ_P w(P) y^(|P|-c)."""
    g = read_graph(graph_file)
    weights: Dict[Transition, polynomials.Weight] = read_weights(weights_file) if weights_file else {}
    unknown = sorted({t.vertex for t in weights} - set(g.vertices))
    if unknown:
        raise InputError(f"weights name unknown vertices {unknown}", location=unknown[0])
    emit_poly(ctx, polynomials.transition_poly(g, weights, y=y_value))


@cli.command("interlace-poly")
@click.argument("graph_file", type=click.Path())
@click.pass_context
def interlace_poly(ctx: click.Context, graph_file: str):
    """Interlace polynomial of the interlacement graph of an Euler system."""
    g = read_graph(graph_file)
    emit_poly(ctx, polynomials.interlace_poly(tracing.interlacement(tracing.euler_system(g))))


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.option("--transversal", "-t", required=True, help="Base-3 digits, one per vertex")
@click.pass_context
def touch(ctx: click.Context, graph_file: str, transversal: str):
    """Touch graph of a circuit partition and the rank of its cycle matroid."""
    g = read_graph(graph_file)
    t = tracing.parse_transversal(g, transversal)
    tg = tracing.touch_graph(tracing.trace_partition(g, t))
    touch_rank = transition_matroid.touch_matroid(g, t).rank()
    payload = dict(tg.to_dict(), rank=touch_rank)

    def human(console: Console) -> None:
        table = Table(title=f"touch graph: {tg.node_count} circuits, cycle rank {touch_rank}")
        table.add_column("vertex")
        table.add_column("circuits")
        for v, a, b in tg.edges:
            table.add_row(v, f"{a} - {b}")
        console.print(table)

    emit(ctx, payload, human)


@cli.command("dual-pair")
@click.argument("graph_file", type=click.Path())
@click.option("--t1", required=True, help="First transversal")
@click.option("--t2", required=True, help="Second transversal, different at every vertex")
@click.pass_context
def dual_pair(ctx: click.Context, graph_file: str, t1: str, t2: str):
    """Decide whether two disjoint transversals form a dual pair."""
    g = read_graph(graph_file)
    report = transition_matroid.check_dual_pair(
        g, tracing.parse_transversal(g, t1), tracing.parse_transversal(g, t2)
    )
    answer = "yes" if report.is_dual_pair else "no"
    emit_text(ctx, report.to_dict(), f"dual pair: {answer} (r1={report.r1}, r2={report.r2})")


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.option("--cap", type=click.IntRange(min=1), help="Most interlacement graphs explored per component")
@click.pass_context
def planar(ctx: click.Context, graph_file: str, cap: Optional[int]):
    """Planarity by local complementation orbit search: yes, no or budget_exceeded."""
    result = planarity.is_planar(read_graph(graph_file), cap=cap)
    emit_text(ctx, result.to_dict(), result.answer.value)
    if result.is_planar is None:
        ctx.exit(BudgetExceeded.exit_code)


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.pass_context
def transversals(ctx: click.Context, graph_file: str):
    """Every transversal with its circuit count and rank."""
    g = read_graph(graph_file)
    sizes = tracing.partition_sizes(g)
    ranks = transition_matroid.transversal_ranks(g)
    rows = [
        {"index": k, "transversal": tracing.transversal_from_index(g, k).digits, "circuits": s, "rank": r}
        for k, (s, r) in enumerate(zip(sizes, ranks))
    ]

    def human(console: Console) -> None:
        table = Table(title=f"{len(rows)} transversals")
        for column in ("index", "transversal", "circuits", "rank"):
            table.add_column(column, justify="right")
        for row in rows:
            table.add_row(*(str(row[k]) for k in ("index", "transversal", "circuits", "rank")))
        console.print(table)

    emit(ctx, rows, human)


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.pass_context
def matroid(ctx: click.Context, graph_file: str):
    """Dump the transition matroid built from an Euler system."""
    m = transition_matroid.graph_matroid(read_graph(graph_file))
    payload = {"ground": [str(label) for label in m.ground], "rows": m.rep.to_strings()}
    emit_text(ctx, payload, MatroidDumpCodec().encode(m))


# -- structural moves -----------------------------------------------------------------


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.option("--transition", "transition_text", required=True, help="<vertex>:t0|t1|t2")
@click.pass_context
def detach(ctx: click.Context, graph_file: str, transition_text: str):
    """Split a vertex along one of its transitions."""
    emit_graph(ctx, moves.detachment(read_graph(graph_file), Transition.parse(transition_text)))


@cli.command("sum")
@click.argument("first_file", type=click.Path())
@click.argument("second_file", type=click.Path())
@click.option("--edge1", nargs=2, required=True, help="Edge of the first graph: two half-edges")
@click.option("--edge2", nargs=2, required=True, help="Edge of the second graph: two half-edges")
@click.option("--matching", type=click.Choice(["0", "1"]), default="0", show_default=True)
@click.pass_context
def connected_sum(ctx: click.Context, first_file: str, second_file: str, edge1, edge2, matching: str):
    """Connected sum of two graphs across one edge of each."""
    g = moves.connected_sum(
        read_graph(first_file), parse_edge(edge1), read_graph(second_file), parse_edge(edge2), int(matching)
    )
    emit_graph(ctx, g)


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.option("--edge", "edges", nargs=2, multiple=True, required=True, help="A cut edge (give two)")
@click.pass_context
def separate(ctx: click.Context, graph_file: str, edges: List[Tuple[str, str]]):
    """Undo a connected sum across a 2-edge cut."""
    if len(edges) != 2:
        raise InputError(f"separate needs exactly two --edge options, got {len(edges)}")
    emit_graph(ctx, moves.separation(read_graph(graph_file), parse_edge(edges[0]), parse_edge(edges[1])))


@cli.command()
@click.argument("graph_file", type=click.Path())
@click.option("--edge", "edges", nargs=2, multiple=True, required=True, help="A cut edge (give four, two per pair)")
@click.option("--reattach", type=click.Choice(["swap", "identity"]), default="swap", show_default=True)
@click.pass_context
def mutate(ctx: click.Context, graph_file: str, edges: List[Tuple[str, str]], reattach: str):
    """Balanced mutation across a 4-edge cut."""
    if len(edges) != 4:
        raise InputError(f"mutate needs exactly four --edge options, got {len(edges)}")
    cut = [parse_edge(e) for e in edges]
    emit_graph(ctx, moves.balanced_mutation(read_graph(graph_file), ((cut[0], cut[1]), (cut[2], cut[3])), reattach))


# -- ribbon graphs ------------------------------------------------------------------------


@cli.command()
@click.argument("ribbon_file", type=click.Path())
@click.pass_context
def medial(ctx: click.Context, ribbon_file: str):
    """Medial graph of a ribbon graph with its δ and ε transversals."""
    G = read_ribbon(ribbon_file)
    f, delta, epsilon = ribbon.medial(G)
    text = GraphTextCodec().encode(f)
    text += f"# delta: {delta.digits}\n# epsilon: {epsilon.digits}\n"
    emit_text(ctx, ribbon.medial_profile(G), text)


@cli.command()
@click.argument("ribbon_file", type=click.Path())
@click.pass_context
def surface(ctx: click.Context, ribbon_file: str):
    """Boundary components, Euler characteristic, orientability and genus."""
    summary = ribbon.surface_summary(read_ribbon(ribbon_file))

    def human(console: Console) -> None:
        kind = "orientable" if summary.orientable else "non-orientable"
        console.print(
            f"{len(summary.components)} component(s), {summary.boundary_count} boundary curve(s), "
            f"χ={summary.euler_characteristic}, {kind}, genus {', '.join(str(k) for k in summary.genus)}"
        )

    emit(ctx, summary.to_dict(), human)


@cli.command("ribbon-br")
@click.argument("ribbon_file", type=click.Path())
@click.pass_context
def ribbon_br(ctx: click.Context, ribbon_file: str):
    """Bollobás-Riordan polynomial R(x, y, z)."""
    emit_poly(ctx, ribbon.bollobas_riordan(read_ribbon(ribbon_file)))


@cli.command("ribbon-dual")
@click.argument("ribbon_file", type=click.Path())
@click.option(
    "--kind",
    type=click.Choice(["geometric", "partial", "twist"]),
    default="geometric",
    show_default=True,
)
@click.option("--edge", "edge_names", multiple=True, help="Edge for partial duals and twists")
@click.pass_context
def ribbon_dual(ctx: click.Context, ribbon_file: str, kind: str, edge_names: Tuple[str, ...]):
    """Twisted duals: the geometric dual, a partial dual, or a half-twist."""
    G = read_ribbon(ribbon_file)
    if kind == "geometric":
        result = ribbon.geometric_dual(G)
    elif kind == "partial":
        result = ribbon.partial_dual(G, edge_names)
    else:
        result = ribbon.half_twist(G, edge_names)
    emit_text(ctx, result.to_dict(), RibbonTextCodec().encode(result))


# -- knot diagrams -------------------------------------------------------------------------


@cli.command()
@click.argument("pd_file", type=click.Path())
@click.option("--normalize", is_flag=True, help="Multiply by (-A^3)^(-writhe)")
@click.option("--writhe", type=int, help="Writhe, overriding the file header")
@click.pass_context
def bracket(ctx: click.Context, pd_file: str, normalize: bool, writhe: Optional[int]):
    """Kauffman bracket of a planar diagram code."""
    pd = read_diagram(pd_file)
    emit_poly(ctx, knots.normalized_bracket(pd, writhe) if normalize else knots.bracket(pd))


# -- double occurrence words ----------------------------------------------------------------


@cli.group()
def dow():
    """Double occurrence word operations."""


@dow.command("canonical")
@click.argument("dow_file", type=click.Path())
@click.pass_context
def dow_canonical(ctx: click.Context, dow_file: str):
    """Canonical representative under cyclic shifts, reversal and renaming."""
    family = DowFamily(words.canonical_family(read_family(dow_file)))
    emit_text(ctx, family.to_dict(), str(family))


@dow.command("equivalent")
@click.argument("first_file", type=click.Path())
@click.argument("second_file", type=click.Path())
@click.pass_context
def dow_equivalent(ctx: click.Context, first_file: str, second_file: str):
    """Whether two families are equal up to the word equivalences."""
    same = words.families_equivalent(read_family(first_file), read_family(second_file))
    emit_text(ctx, {"equivalent": same}, "yes" if same else "no")


@dow.command("interlace")
@click.argument("dow_file", type=click.Path())
@click.pass_context
def dow_interlace(ctx: click.Context, dow_file: str):
    """Interlacement graph of the letters."""
    h = words.interlacement_of(read_family(dow_file))
    lines = [f"{v}: {' '.join(h.neighbors(v))}".rstrip() for v in h.vertices]
    emit_text(ctx, h.to_dict(), "\n".join(lines))


@dow.command("graph")
@click.argument("dow_file", type=click.Path())
@click.pass_context
def dow_graph(ctx: click.Context, dow_file: str):
    """The 4-regular graph the words trace, as .frg text."""
    g, _ = words.graph_from_family(read_family(dow_file))
    emit_graph(ctx, g)


@dow.command("turnaround")
@click.argument("dow_file", type=click.Path())
@click.option("--word", "word_index", type=int, default=0, show_default=True)
@click.option("--letters", required=True, help="Comma-separated letters of V'")
@click.option("--variant", type=click.Choice(["1", "2", "3"]), default="1", show_default=True)
@click.pass_context
def dow_turnaround(ctx: click.Context, dow_file: str, word_index: int, letters: str, variant: str):
    """Block-reversal move; the interlacement graph is unchanged."""
    v_prime = {letter.strip() for letter in letters.split(",") if letter.strip()}
    family = words.turnaround(read_family(dow_file), word_index, v_prime, variant=int(variant))
    emit_text(ctx, family.to_dict(), str(family))


def main():
    """Main entry point."""
    cli()


if __name__ == "__main__":
    main()
