import json

import numpy as np
import pytest

from tensorpath.groups import build_root_system, freudenthal_diagram
from tensorpath.lattice import build_step_set
from tensorpath.sdk.exceptions import SpanDeficient


@pytest.fixture
def binomial():
    """steps {0,1,2} with weights {1,2,1}: k(tau) = (1 + e^tau)^2."""
    return build_step_set(1, [[0], [1], [2]], [1, 2, 1])


@pytest.fixture
def simple_walk():
    return build_step_set(1, [[-1], [1]], [1, 1])


@pytest.fixture
def a1_spin_half():
    return freudenthal_diagram(build_root_system("A1"), (1,))


@pytest.fixture
def u2_n3():
    return freudenthal_diagram(build_root_system("U2"), (3, 0))


@pytest.fixture
def binomial_file(tmp_path):
    path = tmp_path / "binomial.json"
    path.write_text(json.dumps({
        "dim": 1,
        "steps": [
            {"coords": [0], "weight": 1},
            {"coords": [1], "weight": "2"},
            {"coords": [2], "weight": "1/1"},
        ],
    }))
    return path


def random_step_set(rng: np.random.Generator, max_dim: int = 2, max_steps: int = 6):
    """A full-rank step set with integer steps in [-5, 5] and rational weights <= 10."""
    while True:
        dim = int(rng.integers(1, max_dim + 1))
        count = int(rng.integers(dim + 1, max_steps + 1))
        steps = {tuple(int(c) for c in rng.integers(-5, 6, size=dim)) for _ in range(count)}
        if len(steps) < dim + 1:
            continue
        weights = [f"{int(rng.integers(1, 11))}/{int(rng.integers(1, 4))}" for _ in steps]
        try:
            return build_step_set(dim, sorted(steps), weights)
        except SpanDeficient:
            continue
