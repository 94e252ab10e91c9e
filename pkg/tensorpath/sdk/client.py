from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Union

from pydantic import ValidationError

from tensorpath.config.loaders import (
    load_rate_profile_from_yaml,
    load_step_set_from_dict,
    load_step_set_from_json,
    load_sweep_from_dict,
    load_sweep_from_yaml,
)
from tensorpath.config.models import RateProfileSpec, SweepSpec
from tensorpath.core.compare_manager import CompareManager, CompareResult
from tensorpath.core.rate_profile import RateProfileManager
from tensorpath.core.report import Report, write_report
from tensorpath.groups.freudenthal import WeightDiagram, freudenthal_diagram
from tensorpath.groups.registry import build_root_system
from tensorpath.lattice.step_set import WeightedStepSet
from tensorpath.runners.base import BaseRunner, SerialRunner
from .exceptions import ConfigurationError, TensorPathError

SpecLike = Union[SweepSpec, Dict[str, Any], Path, str]


class TensorPathClient:
    """
    Python SDK client for exact and asymptotic multiplicity sweeps.
    """

    def __init__(self, runner: Optional[BaseRunner] = None):
        """
        Args:
            runner: An optional runner instance. Defaults to SerialRunner.
        """
        self.runner = runner or SerialRunner()
        self.compare_manager = CompareManager(self.runner)
        self.rate_profile_manager = RateProfileManager(self.runner)

    def _sweep(self, spec: SpecLike) -> SweepSpec:
        if isinstance(spec, SweepSpec):
            return spec
        if isinstance(spec, dict):
            return load_sweep_from_dict(spec)
        if isinstance(spec, (str, Path)):
            return load_sweep_from_yaml(Path(spec))
        raise TypeError("Invalid spec type. Must be SweepSpec, dict, str, or Path.")

    def compare(self, spec: SpecLike, write: bool = False) -> CompareResult:
        """
        Runs a comparison sweep.

        Args:
            spec: Sweep specification as a SweepSpec, a dictionary or a YAML path.
            write: Also write the report to spec.output.

        Raises:
            ConfigurationError: If the sweep definition is invalid.
            TensorPathError: Typed errors of the underlying modules propagate unchanged.
        """
        try:
            sweep = self._sweep(spec)
        except (ValidationError, OSError, ValueError) as e:
            raise ConfigurationError(f"Failed to load sweep specification: {e}") from e
        try:
            result = self.compare_manager.run(sweep)
            if write:
                write_report(result.report, sweep.output)
            return result
        except TensorPathError:
            raise
        except Exception as e:
            raise TensorPathError(f"Failed to run comparison: {e}") from e

    def rate_profile(self, spec: Union[RateProfileSpec, Dict[str, Any], Path, str]) -> Report:
        try:
            if isinstance(spec, RateProfileSpec):
                profile = spec
            elif isinstance(spec, dict):
                profile = RateProfileSpec(**spec)
            elif isinstance(spec, (str, Path)):
                profile = load_rate_profile_from_yaml(Path(spec))
            else:
                raise TypeError("Invalid spec type. Must be RateProfileSpec, dict, str, or Path.")
        except (ValidationError, OSError, ValueError) as e:
            raise ConfigurationError(f"Failed to load rate profile specification: {e}") from e
        try:
            return self.rate_profile_manager.run(profile)
        except TensorPathError:
            raise
        except Exception as e:
            raise TensorPathError(f"Failed to compute rate profile: {e}") from e

    def diagram(self, group: str, highest_weight: Sequence[int]) -> WeightDiagram:
        return freudenthal_diagram(build_root_system(group), highest_weight)

    def step_set(self, source: Union[Dict[str, Any], Path, str]) -> WeightedStepSet:
        try:
            if isinstance(source, dict):
                return load_step_set_from_dict(source)
            return load_step_set_from_json(Path(source))
        except TensorPathError:
            raise
        except (ValidationError, OSError, ValueError) as e:
            raise ConfigurationError(f"Failed to load step set: {e}") from e
