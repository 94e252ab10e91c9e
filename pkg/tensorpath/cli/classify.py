from fractions import Fraction
from pathlib import Path
from typing import Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from typing_extensions import Annotated

from tensorpath.asymptotics.regimes import classify_regime
from tensorpath.core.sources import resolve_source
from tensorpath.lattice.polytope import classify_point
from tensorpath.lattice.step_set import support_test
from tensorpath.sdk.exceptions import TensorPathError

from .utils import build_source, parse_int_vector

console = Console()


def classify_target(
    point: Annotated[str, typer.Argument(help="Target gamma (step sets) or weight nu (groups), e.g. '3,0'.")],
    n: Annotated[int, typer.Option("--N", help="Path length / tensor power.")],
    group: Annotated[Optional[str], typer.Option("--group", "-g", help="Group name: A1, A2 or U2.")] = None,
    highest_weight: Annotated[Optional[str], typer.Option("--lambda", "-l", help="Highest weight, e.g. '1,1'.")] = None,
    steps: Annotated[
        Optional[Path],
        typer.Option("--steps", "-s", exists=True, dir_okay=False, readable=True, help="Step-set JSON file."),
    ] = None,
    cl_cut: Annotated[float, typer.Option("--cl-cut")] = 3.0,
    md_cut: Annotated[float, typer.Option("--md-cut")] = 1.0,
    md_smax: Annotated[float, typer.Option("--md-smax")] = 0.75,
):
    """
    Reports the support test, polytope location and asymptotic regime of one target.
    """
    try:
        resolved = resolve_source(build_source(group, highest_weight, steps))
        target = resolved.check_target(parse_int_vector(point, "point"))
        gamma = resolved.to_gamma(n, target)
    except ValidationError:
        raise typer.Exit(code=1)
    except TensorPathError as e:
        console.print(f"[bold red]Error:[/bold red] {type(e).__name__}: {e}")
        raise typer.Exit(code=1)

    s = resolved.step_set
    overview = Table.grid(padding=(0, 1))
    overview.add_column()
    overview.add_column()
    overview.add_row("[cyan]Target:[/cyan]", str(list(target)))
    overview.add_row("[cyan]N:[/cyan]", str(n))
    if gamma is None:
        overview.add_row("[cyan]Lattice point:[/cyan]", "[grey50]off the lattice[/grey50]")
        overview.add_row("[cyan]Support:[/cyan]", "[bold yellow]False[/]")
        console.print(Panel(overview, title="Regime", border_style="blue", expand=False))
        return

    support = support_test(s, n, gamma)
    location = classify_point(s, [Fraction(g, n) for g in gamma]).location
    decision = classify_regime(s, gamma, n, cl_cut=cl_cut, md_cut=md_cut, md_smax=md_smax)
    overview.add_row("[cyan]Lattice point:[/cyan]", str(list(gamma)))
    overview.add_row("[cyan]Support:[/cyan]", f"[bold {'green' if support else 'yellow'}]{support}[/]")
    overview.add_row("[cyan]gamma/N:[/cyan]", location)
    overview.add_row("[cyan]Distance:[/cyan]", f"{decision.distance:.6g}")
    overview.add_row(
        "[cyan]s = log d / log N:[/cyan]",
        "[grey50]undefined[/grey50]" if decision.s_exponent is None else f"{decision.s_exponent:.4f}",
    )
    overview.add_row("[cyan]Regime:[/cyan]", f"[bold]{decision.regime}[/bold]")
    console.print(Panel(overview, title="Regime", border_style="blue", expand=False))
