from pathlib import Path
from typing import List, Optional

import click
import typer
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table
from typing_extensions import Annotated

from tensorpath.config.loaders import load_sweep_from_dict, load_sweep_from_yaml
from tensorpath.config.models import OutputConfig, SweepSpec
from tensorpath.core.compare_manager import CompareManager, CompareResult
from tensorpath.core.report import write_report
from tensorpath.runners.pool import ThreadPoolRunner
from tensorpath.sdk.exceptions import TensorPathError

from .utils import build_source, build_targets, parse_int_vector

console = Console(stderr=True)

INLINE_OPTIONS = (
    "group", "highest_weight", "steps", "n_list", "points", "ray", "grid_radius",
    "estimators", "cl_cut", "md_cut", "md_smax", "tol", "mem_cap",
)


def print_summary(result: CompareResult) -> None:
    if result.summaries:
        table = Table(title="Convergence summary", show_header=True, header_style="bold magenta", border_style="dim")
        table.add_column("Estimator", style="cyan")
        table.add_column("Target")
        table.add_column("N", justify="right")
        table.add_column("|ratio-1| last", justify="right")
        table.add_column("C", justify="right")
        table.add_column("p", justify="right")
        table.add_column("Bound", justify="center")
        table.add_column("Monotone", justify="center")
        for summary in result.summaries:
            stats = summary.stats
            table.add_row(
                summary.estimator,
                summary.target,
                f"{stats.ns[0]}..{stats.ns[-1]}",
                f"{stats.last_error:.3e}",
                f"{stats.constant:.3g}",
                f"{stats.exponent:.3g}",
                "[bold green]yes[/]" if stats.bound_holds else "[bold yellow]no[/]",
                "[bold green]yes[/]" if stats.monotone else "[bold yellow]no[/]",
            )
        console.print(table)

    if result.failures:
        table = Table(title="Cells left empty", show_header=True, header_style="bold magenta", border_style="dim")
        table.add_column("Estimator", style="cyan")
        table.add_column("Reason")
        table.add_column("Cells", justify="right")
        for est in sorted(result.failures):
            for reason, count in sorted(result.failures[est].items()):
                table.add_row(est, reason, str(count))
        console.print(table)


def _spec_from_options(
    group, highest_weight, steps, n_list, points, ray, grid_radius,
    estimators, cl_cut, md_cut, md_smax, tol, mem_cap, out, fmt, threads,
) -> SweepSpec:
    if n_list is None:
        console.print("[bold red]Error:[/bold red] --N is required unless --config is given.")
        raise typer.Exit(code=1)
    spec_dict = {
        "source": build_source(group, highest_weight, steps).model_dump(by_alias=True),
        "N": parse_int_vector(n_list, "N list"),
        "targets": build_targets(points, ray, grid_radius),
        "estimators": [e.strip() for e in estimators.split(",") if e.strip()],
        "thresholds": {"cl_cut": cl_cut, "md_cut": md_cut, "md_smax": md_smax},
        "output": {"path": out, "format": fmt},
        "tol": tol,
        "mem_cap": mem_cap,
    }
    if threads is not None:
        spec_dict["threads"] = threads
    return load_sweep_from_dict(spec_dict)


def run_compare(
    config_path: Annotated[
        Optional[Path],
        typer.Option("--config", "-c", exists=True, dir_okay=False, readable=True,
                     help="YAML sweep specification. Mutually exclusive with the inline source/target options.",
                     show_default=False),
    ] = None,
    group: Annotated[Optional[str], typer.Option("--group", "-g", help="Group name: A1, A2 or U2.")] = None,
    highest_weight: Annotated[Optional[str], typer.Option("--lambda", "-l", help="Highest weight, e.g. '1,1'.")] = None,
    steps: Annotated[
        Optional[Path],
        typer.Option("--steps", "-s", exists=True, dir_okay=False, readable=True, help="Step-set JSON file."),
    ] = None,
    n_list: Annotated[Optional[str], typer.Option("--N", help="Comma-separated ascending path lengths, e.g. '8,16,32'.")] = None,
    points: Annotated[
        Optional[List[str]],
        typer.Option("--point", "-p", help="Explicit target (gamma or nu), repeatable, e.g. '--point 3,0'."),
    ] = None,
    ray: Annotated[Optional[str], typer.Option("--ray", help="Ray target N*A+F, written 'A,F' (1-D) or 'a1,a2;f1,f2'.")] = None,
    grid_radius: Annotated[
        Optional[float], typer.Option("--grid-radius", help="Auto-grid radius r (points within r*sqrt(N) of the center). [default: 3.0]")
    ] = None,
    estimators: Annotated[
        str, typer.Option("--estimators", "-e", help="Comma-separated subset of exact,CL,MD,SD,irredSD,irredCL,rate.")
    ] = "exact,CL,MD,SD",
    cl_cut: Annotated[float, typer.Option("--cl-cut", help="CL regime when the distance is <= cl_cut*sqrt(N).")] = 3.0,
    md_cut: Annotated[float, typer.Option("--md-cut", help="MD regime when the distance is <= md_cut*N^md_smax.")] = 1.0,
    md_smax: Annotated[float, typer.Option("--md-smax", help="Largest MD exponent s, in (1/2, 1).")] = 0.75,
    tol: Annotated[float, typer.Option("--tol", help="Newton tolerance of the dual solver.")] = 1e-12,
    mem_cap: Annotated[int, typer.Option("--mem-cap", help="Largest exact table, in cells.")] = 2**28,
    out: Annotated[Optional[Path], typer.Option("--out", "-o", help="Output file (stdout when omitted).")] = None,
    fmt: Annotated[str, typer.Option("--format", "-f", help="Output format: csv or json.")] = "csv",
    threads: Annotated[Optional[int], typer.Option("--threads", "-t", help="Worker threads. [default: logical cores]")] = None,
):
    """
    Compares exact multiplicities with the CL, MD, SD and irreducible estimators over an (N, target) sweep.

    \n
    Examples:
    \n
        `tensorpath compare --steps binomial.json --N 8,16,32,64 --ray 1,0 --estimators exact,SD`\n
        `tensorpath compare --group A1 --lambda 1 --N 64 --estimators exact,CL`\n
        `tensorpath compare --group U2 --lambda 3,0 --N 10,20,40 --ray '2,1;0,0' --estimators exact,irredSD`\n
        `tensorpath compare --config sweep.yaml --out results.csv`\n
    """
    ctx = click.get_current_context()

    def from_command_line(param: str) -> bool:
        return ctx.get_parameter_source(param) == click.core.ParameterSource.COMMANDLINE

    try:
        if config_path:
            inline_used = [p for p in INLINE_OPTIONS if from_command_line(p)]
            if inline_used:
                console.print(
                    "[bold red]Error:[/bold red] Cannot use inline sweep options "
                    f"({', '.join(inline_used)}) together with --config."
                )
                raise typer.Exit(code=1)
            console.print(f"Loading sweep specification from file: {config_path}")
            spec = load_sweep_from_yaml(config_path)
            if from_command_line("out") or from_command_line("fmt"):
                output = OutputConfig(
                    path=out if from_command_line("out") else spec.output.path,
                    format=fmt if from_command_line("fmt") else spec.output.format,
                )
                spec = spec.model_copy(update={"output": output})
            if from_command_line("threads"):
                spec = spec.model_copy(update={"threads": threads})
        else:
            spec = _spec_from_options(
                group, highest_weight, steps, n_list, points, ray, grid_radius,
                estimators, cl_cut, md_cut, md_smax, tol, mem_cap, out, fmt, threads,
            )
    except (TensorPathError, OSError, ValueError) as e:
        # loaders already reported validation errors
        if not isinstance(e, ValidationError):
            console.print(f"[bold red]Error:[/bold red] {type(e).__name__}: {e}")
        raise typer.Exit(code=1)

    try:
        manager = CompareManager(ThreadPoolRunner(threads=spec.threads))
        result = manager.run(spec)
        path = write_report(result.report, spec.output)
    except TensorPathError as e:
        console.print(f"[bold red]Error:[/bold red] {type(e).__name__}: {e}")
        raise typer.Exit(code=1)
    except Exception as e:
        console.print(f"[bold red]Error running comparison:[/bold red] {e}")
        raise typer.Exit(code=1)

    print_summary(result)
    if path is not None:
        console.print(f"[green]Wrote {len(result.report.rows)} rows to {path}[/green]")
