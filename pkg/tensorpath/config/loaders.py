import json
from pathlib import Path
from typing import Any, Dict

import yaml
from pydantic import ValidationError
from rich.console import Console

from tensorpath.lattice.step_set import WeightedStepSet
from tensorpath.sdk.exceptions import LatticeError

from .models import RateProfileSpec, StepSetFile, SweepSpec

console = Console(stderr=True)


def _read_yaml_mapping(filepath: Path) -> Dict[str, Any]:
    with open(filepath, "r") as f:
        raw = yaml.safe_load(f)
    if not isinstance(raw, dict):
        raise ValueError(f"Invalid YAML format in {filepath}, expected a dictionary.")
    return raw


def load_sweep_from_yaml(filepath: Path) -> SweepSpec:
    """Loads and validates a sweep specification from a YAML file."""
    try:
        return SweepSpec(**_read_yaml_mapping(filepath))
    except FileNotFoundError:
        console.print(f"[bold red]Error:[/bold red] Sweep file not found at {filepath}")
        raise
    except yaml.YAMLError as e:
        console.print(f"[bold red]Error:[/bold red] Could not parse YAML file {filepath}: {e}")
        raise
    except ValidationError as e:
        console.print(f"[bold red]Error:[/bold red] Invalid sweep specification in {filepath}:\n{e}")
        raise


def load_sweep_from_dict(config_dict: Dict[str, Any]) -> SweepSpec:
    """Loads and validates a sweep specification from a dictionary."""
    try:
        return SweepSpec(**config_dict)
    except ValidationError as e:
        console.print(f"[bold red]Error:[/bold red] Invalid sweep specification:\n{e}")
        raise


def load_rate_profile_from_yaml(filepath: Path) -> RateProfileSpec:
    try:
        return RateProfileSpec(**_read_yaml_mapping(filepath))
    except FileNotFoundError:
        console.print(f"[bold red]Error:[/bold red] Rate profile file not found at {filepath}")
        raise
    except yaml.YAMLError as e:
        console.print(f"[bold red]Error:[/bold red] Could not parse YAML file {filepath}: {e}")
        raise
    except ValidationError as e:
        console.print(f"[bold red]Error:[/bold red] Invalid rate profile specification in {filepath}:\n{e}")
        raise


def load_step_set_from_dict(data: Dict[str, Any]) -> WeightedStepSet:
    """Validates the step-set document and builds the step set."""
    try:
        return StepSetFile(**data).to_step_set()
    except ValidationError as e:
        console.print(f"[bold red]Error:[/bold red] Invalid step-set document:\n{e}")
        raise
    except LatticeError as e:
        console.print(f"[bold red]Error:[/bold red] Step set rejected: {e}")
        raise


def load_step_set_from_json(filepath: Path) -> WeightedStepSet:
    """Loads a step set from a JSON file of the form {"dim": m, "steps": [...]}."""
    try:
        with open(filepath, "r") as f:
            raw = json.load(f)
    except FileNotFoundError:
        console.print(f"[bold red]Error:[/bold red] Step-set file not found at {filepath}")
        raise
    except json.JSONDecodeError as e:
        console.print(f"[bold red]Error:[/bold red] Could not parse JSON file {filepath}: {e}")
        raise
    if not isinstance(raw, dict):
        raise ValueError(f"Invalid step-set format in {filepath}, expected an object.")
    return load_step_set_from_dict(raw)
