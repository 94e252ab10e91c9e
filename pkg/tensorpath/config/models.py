import os
from fractions import Fraction
from pathlib import Path
from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from tensorpath.exact.counter import DEFAULT_MEM_CAP
from tensorpath.lattice.step_set import WeightedStepSet, build_step_set

Estimator = Literal["exact", "CL", "MD", "SD", "irredSD", "irredCL", "rate"]
IRREDUCIBLE_ESTIMATORS = ("irredSD", "irredCL")
ESTIMATOR_ORDER = ("exact", "CL", "MD", "SD", "irredSD", "irredCL", "rate")


# --- Step-set file ---


class StepEntry(BaseModel):
    coords: List[int] = Field(..., min_length=1, description="Integer step in L*-coordinates")
    weight: Union[int, str] = Field(1, description="Positive weight, an integer or a 'p/q' string")

    @field_validator("weight", mode="before")
    def check_weight(cls, value):
        if isinstance(value, bool):
            raise ValueError("weight must be an integer or a 'p/q' string")
        try:
            parsed = Fraction(value.strip()) if isinstance(value, str) else Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"invalid rational weight {value!r}: {e}") from e
        if parsed <= 0:
            raise ValueError(f"weight must be positive, got {value!r}")
        return value


class StepSetFile(BaseModel):
    """The step-set JSON document: {"dim": m, "steps": [{"coords": [...], "weight": "p/q"}, ...]}."""

    dim: int = Field(..., ge=1)
    steps: List[StepEntry] = Field(..., min_length=2)

    @model_validator(mode="after")
    def check_steps(self):
        seen = set()
        for entry in self.steps:
            if len(entry.coords) != self.dim:
                raise ValueError(f"step {entry.coords} has length {len(entry.coords)}, expected dim={self.dim}")
            key = tuple(entry.coords)
            if key in seen:
                raise ValueError(f"duplicate step coords {entry.coords}")
            seen.add(key)
        return self

    def to_step_set(self) -> WeightedStepSet:
        return build_step_set(self.dim, [e.coords for e in self.steps], [e.weight for e in self.steps])


# --- Sources ---


class StepSetSource(BaseModel):
    kind: Literal["steps"] = "steps"
    path: Optional[Path] = Field(None, description="Path to a step-set JSON file")
    inline: Optional[StepSetFile] = Field(None, description="Step set given inline")

    @model_validator(mode="after")
    def check_exactly_one(self):
        if (self.path is None) == (self.inline is None):
            raise ValueError("Exactly one of 'path' or 'inline' must be given for a step-set source.")
        return self


class GroupSource(BaseModel):
    kind: Literal["group"] = "group"
    group: Literal["A1", "A2", "U2"]
    highest_weight: List[int] = Field(..., alias="lambda", min_length=1)

    model_config = {"populate_by_name": True}


Source = Annotated[Union[StepSetSource, GroupSource], Field(discriminator="kind")]


# --- Targets ---


class PointTargets(BaseModel):
    kind: Literal["points"] = "points"
    points: List[List[int]] = Field(..., min_length=1)


class RayTargets(BaseModel):
    """Targets N*alpha + f, one per N."""
    kind: Literal["ray"] = "ray"
    alpha: List[int] = Field(..., min_length=1)
    f: Optional[List[int]] = None

    @model_validator(mode="after")
    def default_shift(self):
        if self.f is None:
            self.f = [0] * len(self.alpha)
        if len(self.f) != len(self.alpha):
            raise ValueError("ray alpha and f must have the same length")
        return self


class GridTargets(BaseModel):
    """All support-admissible points within radius*sqrt(N) of N times the center of mass."""
    kind: Literal["grid"] = "grid"
    radius: float = Field(3.0, gt=0)


Targets = Annotated[Union[PointTargets, RayTargets, GridTargets], Field(discriminator="kind")]


# --- Run settings ---


class RegimeThresholds(BaseModel):
    cl_cut: float = Field(3.0, gt=0, description="CL if distance <= cl_cut*sqrt(N)")
    md_cut: float = Field(1.0, gt=0, description="MD if distance <= md_cut*N^md_smax")
    md_smax: float = Field(0.75, gt=0.5, lt=1.0)


class OutputConfig(BaseModel):
    path: Optional[Path] = Field(None, description="Output file; stdout when omitted")
    format: Literal["csv", "json"] = "csv"


class SweepSpec(BaseModel):
    source: Source
    n_list: List[int] = Field(..., alias="N", min_length=1)
    targets: Targets = Field(default_factory=GridTargets)
    estimators: List[Estimator] = Field(default_factory=lambda: ["exact", "CL", "MD", "SD"], min_length=1)
    thresholds: RegimeThresholds = Field(default_factory=RegimeThresholds)
    output: OutputConfig = Field(default_factory=OutputConfig)
    tol: float = Field(1e-12, gt=0)
    mem_cap: int = Field(DEFAULT_MEM_CAP, ge=1)
    threads: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)

    model_config = {"populate_by_name": True}

    @field_validator("n_list")
    def check_n_list(cls, value: List[int]):
        if any(n < 1 for n in value):
            raise ValueError("every N must be a positive integer")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("N list must be strictly ascending")
        return value

    @field_validator("estimators")
    def canonical_estimators(cls, value: List[str]):
        return [e for e in ESTIMATOR_ORDER if e in value]

    @model_validator(mode="after")
    def check_irreducible_needs_group(self):
        if self.source.kind != "group" and any(e in IRREDUCIBLE_ESTIMATORS for e in self.estimators):
            raise ValueError("irredSD / irredCL estimators need a group source")
        return self


class RateProfileSpec(BaseModel):
    source: Source
    grid_points: int = Field(9, ge=2, description="Grid points per axis inside the step polytope")
    empirical_n: Optional[int] = Field(None, ge=1, description="N for the empirical -(1/N) log mass column")
    output: OutputConfig = Field(default_factory=OutputConfig)
    tol: float = Field(1e-12, gt=0)
    mem_cap: int = Field(DEFAULT_MEM_CAP, ge=1)
    threads: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
