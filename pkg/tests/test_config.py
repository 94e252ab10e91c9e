from fractions import Fraction
import json
import os

from pydantic import ValidationError
import pytest
import yaml

from tensorpath.config import (
    GridTargets,
    GroupSource,
    RateProfileSpec,
    RayTargets,
    StepSetFile,
    StepSetSource,
    SweepSpec,
    load_rate_profile_from_yaml,
    load_step_set_from_dict,
    load_step_set_from_json,
    load_sweep_from_dict,
    load_sweep_from_yaml,
)
from tensorpath.exact import DEFAULT_MEM_CAP
from tensorpath.sdk.exceptions import SpanDeficient


def write_yaml(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(yaml.safe_dump(data))
    return path


def test_sweep_defaults():
    spec = SweepSpec(source={"kind": "group", "group": "A1", "lambda": [1]}, N=[2, 4])
    assert isinstance(spec.source, GroupSource)
    assert spec.source.highest_weight == [1]
    assert spec.n_list == [2, 4]
    assert isinstance(spec.targets, GridTargets)
    assert spec.targets.radius == 3.0
    assert spec.estimators == ["exact", "CL", "MD", "SD"]
    assert spec.thresholds.cl_cut == 3.0
    assert spec.thresholds.md_smax == 0.75
    assert spec.output.path is None
    assert spec.output.format == "csv"
    assert spec.tol == 1e-12
    assert spec.mem_cap == DEFAULT_MEM_CAP
    assert spec.threads >= 1


def test_estimators_are_put_in_canonical_order():
    spec = SweepSpec(
        source={"kind": "group", "group": "U2", "lambda": [3, 0]},
        N=[1],
        estimators=["rate", "irredSD", "SD", "exact"],
    )
    assert spec.estimators == ["exact", "SD", "irredSD", "rate"]


@pytest.mark.parametrize("n_list", [[], [4, 2], [2, 2], [0, 1]])
def test_n_list_must_be_positive_and_ascending(n_list):
    with pytest.raises(ValidationError):
        SweepSpec(source={"kind": "group", "group": "A1", "lambda": [1]}, N=n_list)


def test_irreducible_estimators_need_group_source():
    steps = {"dim": 1, "steps": [{"coords": [0]}, {"coords": [1]}]}
    with pytest.raises(ValidationError, match="group source"):
        SweepSpec(source={"kind": "steps", "inline": steps}, N=[1], estimators=["irredSD"])


def test_unknown_estimator_and_group_rejected():
    with pytest.raises(ValidationError):
        SweepSpec(source={"kind": "group", "group": "A1", "lambda": [1]}, N=[1], estimators=["WKB"])
    with pytest.raises(ValidationError):
        SweepSpec(source={"kind": "group", "group": "G2", "lambda": [1, 0]}, N=[1])


def test_step_set_source_requires_exactly_one_origin(binomial_file):
    with pytest.raises(ValidationError):
        StepSetSource()
    with pytest.raises(ValidationError):
        StepSetSource(path=binomial_file, inline={"dim": 1, "steps": [{"coords": [0]}, {"coords": [1]}]})
    assert StepSetSource(path=binomial_file).path == binomial_file


def test_ray_targets_default_shift():
    ray = RayTargets(alpha=[1, 0])
    assert ray.f == [0, 0]
    with pytest.raises(ValidationError):
        RayTargets(alpha=[1, 0], f=[1])


def test_thresholds_range():
    with pytest.raises(ValidationError):
        SweepSpec(source={"kind": "group", "group": "A1", "lambda": [1]}, N=[1], thresholds={"md_smax": 0.4})
    with pytest.raises(ValidationError):
        SweepSpec(source={"kind": "group", "group": "A1", "lambda": [1]}, N=[1], thresholds={"cl_cut": 0})


def test_step_set_file_validation():
    doc = StepSetFile(dim=2, steps=[{"coords": [0, 0], "weight": "1/2"}, {"coords": [1, 0]}, {"coords": [0, 1]}])
    s = doc.to_step_set()
    assert s.total_weight == Fraction(5, 2)
    with pytest.raises(ValidationError, match="duplicate"):
        StepSetFile(dim=1, steps=[{"coords": [0]}, {"coords": [0]}])
    with pytest.raises(ValidationError, match="expected dim"):
        StepSetFile(dim=2, steps=[{"coords": [0]}, {"coords": [1, 1]}])


@pytest.mark.parametrize("weight", [0, "-1/2", "abc", "1/0", True])
def test_step_entry_rejects_bad_weights(weight):
    with pytest.raises(ValidationError):
        StepSetFile(dim=1, steps=[{"coords": [0], "weight": weight}, {"coords": [1]}])


def test_load_step_set_from_json(binomial_file, binomial):
    assert load_step_set_from_json(binomial_file) == binomial


def test_load_step_set_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_step_set_from_json(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(json.JSONDecodeError):
        load_step_set_from_json(broken)
    with pytest.raises(SpanDeficient):
        load_step_set_from_dict({"dim": 2, "steps": [{"coords": [0, 0]}, {"coords": [1, 1]}]})


def test_load_sweep_from_yaml(tmp_path, binomial_file):
    path = write_yaml(tmp_path, "sweep.yaml", {
        "source": {"kind": "steps", "path": str(binomial_file)},
        "N": [10, 20, 40],
        "targets": {"kind": "ray", "alpha": [1], "f": [0]},
        "estimators": ["SD", "exact"],
        "output": {"path": str(tmp_path / "out.csv"), "format": "csv"},
        "threads": 2,
    })
    spec = load_sweep_from_yaml(path)
    assert spec.n_list == [10, 20, 40]
    assert spec.targets.kind == "ray"
    assert spec.estimators == ["exact", "SD"]
    assert spec.threads == 2


def test_load_sweep_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_sweep_from_yaml(tmp_path / "missing.yaml")
    bad = tmp_path / "bad.yaml"
    bad.write_text("- just\n- a list\n")
    with pytest.raises(ValueError, match="expected a dictionary"):
        load_sweep_from_yaml(bad)
    broken = tmp_path / "broken.yaml"
    broken.write_text("source: [unclosed\n")
    with pytest.raises(yaml.YAMLError):
        load_sweep_from_yaml(broken)
    with pytest.raises(ValidationError):
        load_sweep_from_dict({"source": {"kind": "group", "group": "A1", "lambda": [1]}})


def test_load_rate_profile_from_yaml(tmp_path):
    path = write_yaml(tmp_path, "rate.yaml", {
        "source": {"kind": "steps", "inline": {"dim": 1, "steps": [{"coords": [-1]}, {"coords": [1]}]}},
        "grid_points": 5,
        "empirical_n": 50,
        "output": {"format": "json"},
    })
    spec = load_rate_profile_from_yaml(path)
    assert isinstance(spec, RateProfileSpec)
    assert spec.grid_points == 5
    assert spec.empirical_n == 50
    assert spec.output.format == "json"
    assert spec.threads == (os.cpu_count() or 1)
    with pytest.raises(ValidationError):
        RateProfileSpec(source={"kind": "group", "group": "A1", "lambda": [1]}, grid_points=1)
