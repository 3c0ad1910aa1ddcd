# src/main.py

"""
Command-line interface (CLI) entry point for the internal degree laboratory.

Commands: generate, verify, solve and report. Exit codes: 0 success
(indeterminate results included, flagged by the report status), 1 usage
error, 2 invalid input, 3 internal inconsistency.
"""
import sys
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, Optional

import click
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

# --- Local Imports ---
import config.settings as settings

from src import __version__
from src.constructions import (
    build_complete,
    build_counterexample,
    build_cycle,
    build_path,
    build_random_regular,
    build_star,
)
from src.core.counting import spanning_tree_count
from src.core.errors import DisconnectedGraphError, EmptyGraphError, LabError
from src.core.formats import emit_dot, emit_graph6
from src.core.graph import Graph, is_connected, min_degree
from src.engine.certificate import check_labels
from src.engine.greedy import max_leaf_greedy
from src.engine.search import exists_tree_all_internal_at_least, max_min_internal_degree
from src.graph.workflow import VerificationWorkflow
from src.models.inputs import (
    Command,
    CounterexampleParams,
    GraphSource,
    RunConfig,
    SearchBudget,
    SolveMode,
    StarBoundParams,
)
from src.models.outputs import (
    CountResult,
    Report,
    StarBoundComparison,
    VerificationResult,
    VerificationVerdict,
)
from src.stars.factor import max_min_star_size, star_size_lower_bound
from src.utils.io import (
    dump_report,
    load_report,
    load_source,
    sidecar_path,
    write_graph,
    write_report,
    write_roles,
)
from src.utils.logger import bind_run_context, get_logger

# Initialize logger and console immediately
logger = get_logger("CLI")
console = Console()

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INCONSISTENT = 3

STATUS_COLORS = {
    "ok": "green",
    "refuted": "yellow",
    "indeterminate": "cyan",
    "inconsistent": "red",
    "error": "red",
}


# --- Errors & Exit Codes ---


class InputError(click.ClickException):
    """Invalid parameters, unreadable or malformed input, or a graph the solver cannot take."""

    exit_code = EXIT_INPUT


class InconsistencyError(click.ClickException):
    """Verification methods disagreed or a workflow step failed."""

    exit_code = EXIT_INCONSISTENT


def describe_error(exc: Exception) -> str:
    """One-line message naming the violated bound."""
    if isinstance(exc, ValidationError):
        return "; ".join(err["msg"].removeprefix("Value error, ") for err in exc.errors())
    return str(exc)


@contextmanager
def input_errors() -> Iterator[None]:
    """Translate library and validation errors into exit status 2."""
    try:
        yield
    except (LabError, ValidationError, OSError) as e:
        logger.warning(f"Input rejected: {describe_error(e)}")
        raise InputError(describe_error(e)) from e


class LabGroup(click.Group):
    """Click group that maps usage errors to exit status 1 instead of click's 2."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            code = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        sys.exit(code if isinstance(code, int) else EXIT_OK)


# --- Helper Functions for Output Formatting ---


def _flatten(prefix: str, value: Any) -> Iterator[tuple[str, str]]:
    if isinstance(value, dict):
        for key in sorted(value):
            yield from _flatten(f"{prefix}.{key}" if prefix else key, value[key])
    elif isinstance(value, list) and len(value) > 6:
        yield prefix, f"[{len(value)} items]"
    else:
        yield prefix, str(value)


def print_summary_table(report: Report):
    """Prints a summary table of a report."""
    command = report.command.get("command", "run")
    console.rule(f"[bold]{command} Summary[/bold]", style="bold magenta")

    table = Table(
        title="Results",
        show_header=True,
        header_style="bold blue",
        padding=(0, 1),
    )
    table.add_column("Metric", style="dim")
    table.add_column("Value")

    color = STATUS_COLORS.get(report.status, "white")
    table.add_row("Status", f"[{color} bold]{report.status}[/]", end_section=True)
    table.add_row("Fingerprint (graph6)", report.fingerprint)
    for key, value in _flatten("", report.results):
        table.add_row(key, value)
    if report.wall_time_seconds is not None:
        table.add_row("Wall Time", f"{report.wall_time_seconds:.3f} seconds")
    table.add_row("Tool Version", report.tool_version)

    console.print(table)


def make_report(
    config: RunConfig, g: Graph, status: str, results: dict[str, Any], started: float
) -> Report:
    return Report(
        tool_version=__version__,
        fingerprint=emit_graph6(g).decode("ascii"),
        command=config.echo(),
        status=status,
        results=results,
        wall_time_seconds=round(time.monotonic() - started, 6),
    )


def emit_report(report: Report, config: RunConfig) -> None:
    """JSON to stdout, or to --report with a summary table on stdout."""
    text = dump_report(report, config.include_timing)
    if config.report_path is None:
        click.echo(text, nl=False)
        return
    with input_errors():
        write_report(config.report_path, text)
    print_summary_table(report)


# --- Shared Options ---


def with_options(options):
    def decorator(func):
        for option in reversed(options):
            func = option(func)
        return func

    return decorator


SOURCE_OPTIONS = [
    click.option(
        "--input",
        "input_path",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="graph6 file holding one graph.",
    ),
    click.option(
        "--roles",
        "roles_path",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="Role-label JSON (default: the .roles.json sidecar next to --input).",
    ),
    click.option(
        "--counterexample", is_flag=True, help="Build the counterexample graph instead of reading a file."
    ),
    click.option("--d", "d", type=int, default=None, help="Minimum degree of the counterexample."),
    click.option("--n", "n", type=int, default=None, help="Vertex count of the counterexample."),
]

RUN_OPTIONS = [
    click.option("--budget-nodes", type=int, default=None, help="Search node limit."),
    click.option("--budget-seconds", type=float, default=None, help="Search wall-clock limit."),
    click.option("--workers", type=int, default=None, help="Worker processes for the solvers."),
    click.option("--seed", type=int, default=None, help="Seed of the random tree sampler."),
    click.option(
        "--report",
        "report_path",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="Write the JSON report here instead of stdout.",
    ),
    click.option(
        "--timing/--no-timing",
        default=None,
        help="Include wall time in the report (--no-timing gives byte-stable reports).",
    ),
]


def resolve_source(
    input_path: Optional[Path],
    roles_path: Optional[Path],
    counterexample: bool,
    d: Optional[int],
    n: Optional[int],
) -> GraphSource:
    if counterexample and input_path is not None:
        raise click.UsageError("use either --input or --counterexample, not both")
    if counterexample:
        if d is None or n is None:
            raise click.UsageError("--counterexample needs --d and --n")
        return GraphSource(counterexample=CounterexampleParams(d=d, n=n), roles_path=roles_path)
    if input_path is None:
        raise click.UsageError("one of --input or --counterexample is required")
    return GraphSource(input_path=input_path, roles_path=roles_path)


def build_config(
    command: Command,
    source: GraphSource,
    mode: Optional[SolveMode] = None,
    k: Optional[int] = None,
    budget_nodes: Optional[int] = None,
    budget_seconds: Optional[float] = None,
    workers: Optional[int] = None,
    seed: Optional[int] = None,
    c: Optional[float] = None,
    threshold: Optional[int] = None,
    report_path: Optional[Path] = None,
    timing: Optional[bool] = None,
) -> RunConfig:
    """CLI flags override settings; settings override model defaults."""
    s = settings.get_settings()
    return RunConfig(
        command=command,
        source=source,
        mode=mode,
        k=k,
        budget=SearchBudget(
            node_limit=s.budget_nodes if budget_nodes is None else budget_nodes,
            time_limit=s.budget_seconds if budget_seconds is None else budget_seconds,
        ),
        workers=s.workers if workers is None else workers,
        seed=s.sample_seed if seed is None else seed,
        c=s.star_bound_c if c is None else c,
        enumeration_threshold=s.enumeration_threshold if threshold is None else threshold,
        report_path=report_path,
        include_timing=s.report_include_timing if timing is None else timing,
    )


def verification_status(result: VerificationResult) -> str:
    if result.errors:
        return "error"
    return {
        VerificationVerdict.CONFIRMED: "ok",
        VerificationVerdict.REFUTED: "refuted",
        VerificationVerdict.INDETERMINATE: "indeterminate",
        VerificationVerdict.INCONSISTENT: "inconsistent",
    }[result.verdict]


def exhaustive_status(exhaustive: bool) -> str:
    return "ok" if exhaustive else "indeterminate"


# --- CLI Command Group ---


@click.group(cls=LabGroup)
@click.version_option(__version__, prog_name="internal-degree-lab")
def cli():
    """Internal Degree Laboratory CLI."""
    # Settings are loaded here once for configuration
    settings.get_settings()


@cli.command()
@click.option("--counterexample", is_flag=True, help="The minimum-degree counterexample (needs --d, --n).")
@click.option("--d", "d", type=int, default=None, help="Minimum degree (counterexample, random regular).")
@click.option("--n", "n", type=int, default=None, help="Vertex count of the counterexample.")
@click.option("--complete", type=int, default=None, metavar="M", help="Complete graph K_M.")
@click.option("--path", "path_m", type=int, default=None, metavar="M", help="Path on M vertices.")
@click.option("--cycle", type=int, default=None, metavar="M", help="Cycle on M vertices.")
@click.option("--star", type=int, default=None, metavar="LEAVES", help="Star with LEAVES leaves.")
@click.option("--random-regular", is_flag=True, help="Random d-regular graph on --m vertices.")
@click.option("--m", "m", type=int, default=None, help="Vertex count of the random regular graph.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed of random builders.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="graph6 output file (default: stdout).")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Also write DOT here.")
@click.option("--roles", "roles_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Role-label JSON (default: sidecar next to --out).")
def generate(
    counterexample: bool,
    d: Optional[int],
    n: Optional[int],
    complete: Optional[int],
    path_m: Optional[int],
    cycle: Optional[int],
    star: Optional[int],
    random_regular: bool,
    m: Optional[int],
    seed: int,
    out: Optional[Path],
    dot_path: Optional[Path],
    roles_path: Optional[Path],
):
    """
    Builds a graph and writes it as graph6 (plus optional DOT and role labels).
    """
    families = {
        "--counterexample": counterexample,
        "--complete": complete is not None,
        "--path": path_m is not None,
        "--cycle": cycle is not None,
        "--star": star is not None,
        "--random-regular": random_regular,
    }
    chosen = [name for name, on in families.items() if on]
    if len(chosen) != 1:
        raise click.UsageError(f"choose exactly one family from {', '.join(families)}")
    if counterexample and (d is None or n is None):
        raise click.UsageError("--counterexample needs --d and --n")
    if random_regular and (d is None or m is None):
        raise click.UsageError("--random-regular needs --d and --m")

    labels = None
    with input_errors():
        if counterexample:
            g, labels = build_counterexample(CounterexampleParams(d=d, n=n))
        elif complete is not None:
            g = build_complete(complete)
        elif path_m is not None:
            g = build_path(path_m)
        elif cycle is not None:
            g = build_cycle(cycle)
        elif star is not None:
            g = build_star(star)
        else:
            g = build_random_regular(d, m, seed, settings.get_settings().regular_max_attempts)

        logger.info(f"Generated {chosen[0]} graph: n={g.vertex_count}, m={g.edge_count}")
        if out is None:
            click.echo(emit_graph6(g).decode("ascii"))
        else:
            write_graph(out, g)
        if labels is not None and (out is not None or roles_path is not None):
            write_roles(roles_path or sidecar_path(out), labels)
        if dot_path is not None:
            dot_path.write_text(emit_dot(g, labels), encoding="utf-8")
    return EXIT_OK


@cli.command()
@with_options(SOURCE_OPTIONS)
@click.option("--threshold", type=int, default=None, help="Enumerate all trees when their count is at most this.")
@with_options(RUN_OPTIONS)
def verify(
    input_path, roles_path, counterexample, d, n, threshold,
    budget_nodes, budget_seconds, workers, seed, report_path, timing,
):
    """
    Checks that every spanning tree has an internal vertex of degree 2.
    """
    started = time.monotonic()
    with input_errors():
        source = resolve_source(input_path, roles_path, counterexample, d, n)
        config = build_config(
            Command.VERIFY, source,
            budget_nodes=budget_nodes, budget_seconds=budget_seconds, workers=workers,
            seed=seed, threshold=threshold, report_path=report_path, timing=timing,
        )
        g, labels = load_source(source)
        if g.vertex_count == 0:
            raise EmptyGraphError()
        if not is_connected(g):
            raise DisconnectedGraphError()
        if labels is not None:
            check_labels(g, labels)
        bind_run_context(
            config.command.value, n=g.vertex_count, d=min_degree(g), workers=config.workers
        )

    workflow = VerificationWorkflow(settings.get_settings())
    result = workflow.run_workflow(
        g, labels, config.budget, config.workers, config.seed, config.enumeration_threshold
    )
    status = verification_status(result)
    report = make_report(config, g, status, {"verification": result.model_dump(mode="json")}, started)
    emit_report(report, config)

    if status == "inconsistent":
        raise InconsistencyError(f"INTERNAL INCONSISTENCY: methods disagree {result.methods}")
    if status == "error":
        raise InconsistencyError(f"verification failed: {'; '.join(result.errors)}")
    return EXIT_OK


@cli.command()
@with_options(SOURCE_OPTIONS)
@click.option("--mmid", "mode", flag_value=SolveMode.MMID.value, help="Max-min internal degree.")
@click.option("--count", "mode", flag_value=SolveMode.COUNT.value, help="Exact spanning-tree count.")
@click.option("--starfactor", "mode", flag_value=SolveMode.STAR_FACTOR.value, help="Max-min star size of a star factor.")
@click.option("--maxleaf", "mode", flag_value=SolveMode.MAX_LEAF.value, help="Max-leaf greedy spanning tree.")
@click.option("--hist", "k", type=int, default=None, metavar="K", help="Is there a tree with all internal degrees >= K?")
@click.option("--c", "c", type=float, default=None, help="Constant of the star-size lower bound.")
@with_options(RUN_OPTIONS)
def solve(
    input_path, roles_path, counterexample, d, n, mode, k, c,
    budget_nodes, budget_seconds, workers, seed, report_path, timing,
):
    """
    Runs one solver (selected by flag) and reports value, witness and exhaustiveness.
    """
    started = time.monotonic()
    if mode is not None and k is not None:
        raise click.UsageError("choose exactly one solver flag")
    if mode is None and k is None:
        raise click.UsageError("one of --mmid, --hist K, --count, --starfactor, --maxleaf is required")
    solve_mode = SolveMode.HIST if k is not None else SolveMode(mode)

    with input_errors():
        source = resolve_source(input_path, roles_path, counterexample, d, n)
        config = build_config(
            Command.SOLVE, source, mode=solve_mode, k=k,
            budget_nodes=budget_nodes, budget_seconds=budget_seconds, workers=workers,
            seed=seed, c=c, report_path=report_path, timing=timing,
        )
        g, _ = load_source(source)
        bind_run_context(
            config.command.value,
            mode=solve_mode.value,
            n=g.vertex_count,
            d=min_degree(g) if g.vertex_count else None,
            workers=config.workers,
        )
        status, results = run_solver(config, g)

    emit_report(make_report(config, g, status, results, started), config)
    return EXIT_OK


def run_solver(config: RunConfig, g: Graph) -> tuple[str, dict[str, Any]]:
    """Dispatch on the solve mode; returns the report status and results block."""
    mode = config.mode

    if mode == SolveMode.COUNT:
        result = CountResult(spanning_trees=str(spanning_tree_count(g)))
        return "ok", {"count": result.model_dump(mode="json")}

    if mode == SolveMode.MMID:
        mmid = max_min_internal_degree(g, config.budget, config.workers)
        return exhaustive_status(mmid.exhaustive), {"mmid": mmid.model_dump(mode="json")}

    if mode == SolveMode.HIST:
        decision = exists_tree_all_internal_at_least(g, config.k, config.budget, config.workers)
        return exhaustive_status(decision.exhaustive), {"hist": decision.model_dump(mode="json")}

    if mode == SolveMode.MAX_LEAF:
        return "ok", {"max_leaf": max_leaf_greedy(g).model_dump(mode="json")}

    factor = max_min_star_size(g, config.budget, config.workers)
    delta = min_degree(g)
    comparison = StarBoundComparison(
        min_degree=delta,
        c=config.c,
        bound=star_size_lower_bound(StarBoundParams(c=config.c, d=delta)) if delta >= 2 else None,
        optimum=factor.value,
    )
    return exhaustive_status(factor.exhaustive), {
        "star_factor": factor.model_dump(mode="json"),
        "bound": comparison.model_dump(mode="json"),
    }


@cli.command("report")
@click.argument("path", type=click.Path(dir_okay=False, path_type=Path))
def report_command(path: Path):
    """
    Renders a saved JSON report as a summary table.
    """
    with input_errors():
        report = load_report(path)
    print_summary_table(report)
    return EXIT_OK


def main():
    cli()


# --- Main Execution ---

if __name__ == "__main__":
    main()


# Sample Command:
# python -m src.main verify --counterexample --d 2 --n 8 --no-timing
