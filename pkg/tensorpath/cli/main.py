import typer
from typing import Annotated, Optional

from tensorpath import __version__
from . import classify, compare, diagram, rate

app = typer.Typer(
    name="tensorpath",
    help="Exact and asymptotic weighted lattice-path counts and tensor-power multiplicities.",
    add_completion=False,
)

app.command(name="compare")(compare.run_compare)
app.command(name="rate")(rate.run_rate_profile)
app.command(name="classify")(classify.classify_target)
app.command(name="diagram")(diagram.show_diagram)


def version_callback(value: bool):
    if value:
        print(f"tensorpath version: {__version__}")
        raise typer.Exit()


@app.callback()
def main_options(
    ctx: typer.Context,
    version: Annotated[Optional[bool], typer.Option("--version", "-v", help="Show version and exit.", callback=version_callback, is_eager=True)] = None,
):
    """
    tensorpath CLI main entry point.
    """
    pass


if __name__ == "__main__":
    app()
