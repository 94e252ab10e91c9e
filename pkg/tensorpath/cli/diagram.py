import typer
from rich.console import Console
from rich.padding import Padding
from rich.panel import Panel
from rich.table import Table
from typing_extensions import Annotated

from tensorpath.groups.freudenthal import freudenthal_diagram
from tensorpath.groups.registry import build_root_system
from tensorpath.sdk.exceptions import TensorPathError
from tensorpath.utils.common import fraction_to_str

from .utils import parse_int_vector

console = Console()


def _fmt(vector) -> str:
    return "(" + ", ".join(fraction_to_str(c) for c in vector) + ")"


def show_diagram(
    group: Annotated[str, typer.Option("--group", "-g", help="Group name: A1, A2 or U2.")],
    highest_weight: Annotated[str, typer.Option("--lambda", "-l", help="Highest weight, e.g. '1,1'.")],
):
    """
    Shows the weight diagram of V_lambda with multiplicities and the shifted step set.
    """
    try:
        r = build_root_system(group)
        d = freudenthal_diagram(r, parse_int_vector(highest_weight, "highest weight"))
        s = d.step_set
    except TensorPathError as e:
        console.print(f"[bold red]Error:[/bold red] {type(e).__name__}: {e}")
        raise typer.Exit(code=1)

    console.print(f"\n[bold green]V_{_fmt(d.highest_weight)} of {r.name}[/bold green] [grey50]({r.coordinates_help})[/grey50]")
    summary = Table.grid(padding=(0, 1))
    summary.add_column()
    summary.add_column()
    summary.add_row("[cyan]Dimension:[/cyan]", str(d.dimension))
    summary.add_row("[cyan]Center of mass Q*:[/cyan]", _fmt(d.q_star))
    summary.add_row("[cyan]rho:[/cyan]", _fmt(r.rho))
    summary.add_row("[cyan]|W|:[/cyan]", str(r.weyl_order))
    summary.add_row("[cyan]dim G:[/cyan]", str(r.dim_group))
    summary.add_row("[cyan]|Pi(G)|:[/cyan]", str(r.pi_group_order_g()))
    summary.add_row("[cyan]|Pi(S_lambda)|:[/cyan]", str(s.pi_order))
    console.print(Panel(summary, title="Overview", border_style="blue", expand=False))

    table = Table(title="Weights", show_header=True, header_style="bold magenta", border_style="dim")
    table.add_column("Weight", justify="right")
    table.add_column("Multiplicity", justify="right")
    table.add_column("Step (L* coords)", justify="right", style="cyan")
    table.add_column("Dominant", justify="center")
    for mu, mult in d.entries:
        step = r.to_lattice(tuple(a - b for a, b in zip(mu, d.highest_weight)))
        table.add_row(_fmt(mu), str(mult), _fmt(step), "[green]yes[/]" if r.is_dominant(mu) else "")
    console.print(Padding(table, (1, 0)))
