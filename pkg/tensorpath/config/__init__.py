from .models import (
    GridTargets,
    GroupSource,
    OutputConfig,
    PointTargets,
    RateProfileSpec,
    RayTargets,
    RegimeThresholds,
    StepEntry,
    StepSetFile,
    StepSetSource,
    SweepSpec,
)
from .loaders import (
    load_rate_profile_from_yaml,
    load_step_set_from_dict,
    load_step_set_from_json,
    load_sweep_from_dict,
    load_sweep_from_yaml,
)

__all__ = [
    "GridTargets",
    "GroupSource",
    "OutputConfig",
    "PointTargets",
    "RateProfileSpec",
    "RayTargets",
    "RegimeThresholds",
    "StepEntry",
    "StepSetFile",
    "StepSetSource",
    "SweepSpec",
    "load_rate_profile_from_yaml",
    "load_step_set_from_dict",
    "load_step_set_from_json",
    "load_sweep_from_dict",
    "load_sweep_from_yaml",
]
