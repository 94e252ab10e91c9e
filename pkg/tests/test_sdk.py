import math

import pytest
import yaml

from tensorpath import SweepSpec, TensorPathClient
from tensorpath.runners import SerialRunner
from tensorpath.sdk.exceptions import ConfigurationError, MemoryCapExceeded, SpanDeficient, TensorPathError

BINOMIAL = {"dim": 1, "steps": [{"coords": [0]}, {"coords": [1], "weight": 2}, {"coords": [2]}]}


def ray_sweep(**overrides):
    data = {
        "source": {"kind": "steps", "inline": BINOMIAL},
        "N": [10, 20],
        "targets": {"kind": "ray", "alpha": [1]},
        "estimators": ["exact", "SD"],
    }
    data.update(overrides)
    return data


def test_compare_accepts_dict_model_and_yaml(tmp_path):
    client = TensorPathClient()
    from_dict = client.compare(ray_sweep())
    from_model = client.compare(SweepSpec(**ray_sweep()))
    path = tmp_path / "sweep.yaml"
    path.write_text(yaml.safe_dump(ray_sweep()))
    from_yaml = client.compare(str(path))
    assert from_dict.report.rows == from_model.report.rows == from_yaml.report.rows
    assert from_dict.report.rows[0]["log_exact"] == pytest.approx(math.log(math.comb(20, 10)))


def test_compare_writes_report(tmp_path):
    out = tmp_path / "ray.json"
    TensorPathClient(SerialRunner()).compare(ray_sweep(output={"path": str(out), "format": "json"}), write=True)
    assert out.exists()


def test_compare_configuration_errors():
    client = TensorPathClient()
    with pytest.raises(ConfigurationError):
        client.compare(ray_sweep(N=[20, 10]))
    with pytest.raises(ConfigurationError):
        client.compare("/nonexistent/sweep.yaml")
    with pytest.raises(TypeError):
        client.compare(42)


def test_compare_typed_errors_propagate():
    with pytest.raises(MemoryCapExceeded):
        TensorPathClient().compare(ray_sweep(mem_cap=5))


def test_unexpected_errors_are_wrapped(mocker):
    client = TensorPathClient()
    mocker.patch.object(client.compare_manager, "run", side_effect=RuntimeError("worker died"))
    with pytest.raises(TensorPathError, match="worker died"):
        client.compare(ray_sweep())


def test_rate_profile_from_dict():
    report = TensorPathClient().rate_profile({"source": {"kind": "steps", "inline": BINOMIAL}, "grid_points": 3})
    assert len(report.rows) == 3
    with pytest.raises(ConfigurationError):
        TensorPathClient().rate_profile({"source": {"kind": "steps", "inline": BINOMIAL}, "grid_points": 1})


def test_diagram_and_step_set(binomial_file, binomial):
    client = TensorPathClient()
    assert client.diagram("A2", (1, 1)).dimension == 8
    assert client.step_set(binomial_file) == binomial
    assert client.step_set(BINOMIAL) == binomial
    with pytest.raises(SpanDeficient):
        client.step_set({"dim": 2, "steps": [{"coords": [0, 0]}, {"coords": [1, 1]}]})
    with pytest.raises(ConfigurationError):
        client.step_set({"dim": 1, "steps": [{"coords": [0]}]})
