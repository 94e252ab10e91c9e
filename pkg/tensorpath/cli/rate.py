from pathlib import Path
from typing import Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from typing_extensions import Annotated

from tensorpath.config.loaders import load_rate_profile_from_yaml
from tensorpath.config.models import OutputConfig, RateProfileSpec
from tensorpath.core.rate_profile import RateProfileManager
from tensorpath.core.report import write_report
from tensorpath.runners.pool import ThreadPoolRunner
from tensorpath.sdk.exceptions import TensorPathError

from .utils import build_source

console = Console(stderr=True)


def run_rate_profile(
    config_path: Annotated[
        Optional[Path],
        typer.Option("--config", "-c", exists=True, dir_okay=False, readable=True,
                     help="YAML rate-profile specification.", show_default=False),
    ] = None,
    group: Annotated[Optional[str], typer.Option("--group", "-g", help="Group name: A1, A2 or U2.")] = None,
    highest_weight: Annotated[Optional[str], typer.Option("--lambda", "-l", help="Highest weight, e.g. '1,1'.")] = None,
    steps: Annotated[
        Optional[Path],
        typer.Option("--steps", "-s", exists=True, dir_okay=False, readable=True, help="Step-set JSON file."),
    ] = None,
    grid_points: Annotated[int, typer.Option("--grid-points", help="Grid points per axis inside the step polytope.")] = 9,
    empirical_n: Annotated[
        Optional[int], typer.Option("--empirical-n", help="Add the exact -(1/N) log mass column at this N.")
    ] = None,
    tol: Annotated[float, typer.Option("--tol", help="Newton tolerance of the dual solver.")] = 1e-12,
    mem_cap: Annotated[int, typer.Option("--mem-cap", help="Largest exact table, in cells.")] = 2**28,
    out: Annotated[Optional[Path], typer.Option("--out", "-o", help="Output file (stdout when omitted).")] = None,
    fmt: Annotated[str, typer.Option("--format", "-f", help="Output format: csv or json.")] = "csv",
    threads: Annotated[Optional[int], typer.Option("--threads", "-t", help="Worker threads. [default: logical cores]")] = None,
):
    """
    Tabulates the rate function I, the exponent delta and det A over the interior of the step polytope.
    """
    try:
        if config_path:
            spec = load_rate_profile_from_yaml(config_path)
        else:
            try:
                source = build_source(group, highest_weight, steps)
            except ValidationError:
                raise typer.Exit(code=1)
            spec = RateProfileSpec(
                source=source,
                grid_points=grid_points,
                empirical_n=empirical_n,
                output=OutputConfig(path=out, format=fmt),
                tol=tol,
                mem_cap=mem_cap,
            )
    except ValidationError as e:
        if not config_path:
            console.print(f"[bold red]Error:[/bold red] Invalid rate profile specification:\n{e}")
        raise typer.Exit(code=1)
    except (OSError, ValueError):
        raise typer.Exit(code=1)

    if threads is not None:
        spec = spec.model_copy(update={"threads": threads})

    try:
        report = RateProfileManager(ThreadPoolRunner(threads=spec.threads)).run(spec)
        path = write_report(report, spec.output)
    except TensorPathError as e:
        console.print(f"[bold red]Error:[/bold red] {type(e).__name__}: {e}")
        raise typer.Exit(code=1)
    except Exception as e:
        console.print(f"[bold red]Error computing rate profile:[/bold red] {e}")
        raise typer.Exit(code=1)

    if path is not None:
        console.print(f"[green]Wrote {len(report.rows)} grid points to {path}[/green]")
