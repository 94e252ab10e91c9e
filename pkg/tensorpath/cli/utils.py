import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import typer
from pydantic import ValidationError
from rich.console import Console

from tensorpath.config.models import GroupSource, StepSetSource

console = Console(stderr=True)

_SEPARATORS = re.compile(r"[,\s]+")


def parse_int_vector(text: str, what: str = "vector") -> List[int]:
    """'3,0' or '3 0' -> [3, 0]."""
    parts = [p for p in _SEPARATORS.split(text.strip()) if p]
    if not parts:
        raise typer.BadParameter(f"empty {what}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise typer.BadParameter(f"{what} must be integers, got '{text}'")


def parse_ray(text: str) -> Tuple[List[int], List[int]]:
    """'A;F' with comma-separated components, or 'A,F' for one-dimensional rays.

    Multi-dimensional rays may also be written with space-separated components
    as 'a1 a2,f1 f2'.
    """
    if ";" in text:
        parts = text.split(";")
    else:
        parts = text.split(",")
    if len(parts) != 2:
        raise typer.BadParameter(f"ray must have the form A,F or A;F, got '{text}'")
    return parse_int_vector(parts[0], "ray direction"), parse_int_vector(parts[1], "ray shift")


def build_source(group: Optional[str], highest_weight: Optional[str], steps: Optional[Path]):
    """Source model from --group/--lambda or --steps; exactly one must be given."""
    if steps is not None and (group is not None or highest_weight is not None):
        console.print("[bold red]Error:[/bold red] Cannot use --steps together with --group/--lambda.")
        raise typer.Exit(code=1)
    if steps is not None:
        return StepSetSource(path=steps)
    if group is None or highest_weight is None:
        console.print("[bold red]Error:[/bold red] Provide either --steps FILE or both --group and --lambda.")
        raise typer.Exit(code=1)
    try:
        return GroupSource(group=group.upper(), highest_weight=parse_int_vector(highest_weight, "highest weight"))
    except ValidationError as e:
        console.print(f"[bold red]Error:[/bold red] Invalid group source:\n{e}")
        raise


def build_targets(points: Optional[List[str]], ray: Optional[str], grid_radius: Optional[float]) -> Dict:
    chosen = [opt for opt, value in (("--point", points), ("--ray", ray), ("--grid-radius", grid_radius)) if value]
    if len(chosen) > 1:
        console.print(f"[bold red]Error:[/bold red] Target options are mutually exclusive, got {', '.join(chosen)}.")
        raise typer.Exit(code=1)
    if points:
        return {"kind": "points", "points": [parse_int_vector(p, "point") for p in points]}
    if ray:
        alpha, f = parse_ray(ray)
        return {"kind": "ray", "alpha": alpha, "f": f}
    if grid_radius is not None:
        return {"kind": "grid", "radius": grid_radius}
    return {"kind": "grid"}
