from fractions import Fraction
import math

import numpy as np
import pytest

from conftest import random_step_set
from tensorpath.dual import (
    center_of_mass,
    eval_character,
    invert_moment_map,
    objective,
    rate_by_supremum,
    rate_function,
)
from tensorpath.lattice import build_step_set
from tensorpath.sdk.exceptions import BoundaryUnsupported, DimensionMismatch, NotInterior


def binomial_delta(x: float, p: int = 2) -> float:
    return p * math.log(p) - x * math.log(x) - (p - x) * math.log(p - x)


def test_eval_character_binomial_at_zero(binomial):
    ev = eval_character(binomial, [0.0])
    assert ev.value == pytest.approx(4.0)
    assert ev.log_value == pytest.approx(math.log(4.0))
    assert ev.gradient[0] == pytest.approx(1.0)
    assert ev.hessian[0, 0] == pytest.approx(0.5)


def test_eval_character_simple_walk(simple_walk):
    ev = eval_character(simple_walk, [0.0])
    assert ev.value == pytest.approx(2.0)
    assert ev.gradient[0] == pytest.approx(0.0, abs=1e-15)
    assert ev.hessian[0, 0] == pytest.approx(1.0)

    ev = eval_character(simple_walk, [math.log(3.0)])
    assert ev.value == pytest.approx(10.0 / 3.0)
    assert ev.gradient[0] == pytest.approx(0.8)


def test_eval_character_large_tau_stays_finite(binomial):
    ev = eval_character(binomial, [800.0])
    assert math.isfinite(ev.log_value)
    assert ev.gradient[0] == pytest.approx(2.0)
    with pytest.raises(DimensionMismatch):
        eval_character(binomial, [0.0, 1.0])


@pytest.mark.parametrize(
    "steps, weights, expected",
    [
        ([[0], [1], [2]], [1, 2, 1], (Fraction(1),)),
        ([[-1], [1]], [1, 1], (Fraction(0),)),
        ([[0], [3]], [1, 2], (Fraction(2),)),
    ],
)
def test_center_of_mass(steps, weights, expected):
    assert center_of_mass(build_step_set(1, steps, weights)) == expected


def test_invert_moment_map_binomial_center(binomial):
    dual = invert_moment_map(binomial, [1])
    assert dual.tau[0] == pytest.approx(0.0, abs=1e-14)
    assert dual.delta == pytest.approx(2 * math.log(2.0))
    assert dual.hessian[0, 0] == pytest.approx(0.5)
    assert dual.rate == pytest.approx(0.0, abs=1e-14)


def test_invert_moment_map_binomial_off_center(binomial):
    dual = invert_moment_map(binomial, [Fraction(1, 2)])
    assert dual.tau[0] == pytest.approx(math.log(1.0 / 3.0), rel=1e-12)
    assert dual.delta == pytest.approx(binomial_delta(0.5), rel=1e-12)
    # A(x) = x (p - x) / p
    assert dual.hessian_det == pytest.approx(0.5 * 1.5 / 2.0, rel=1e-10)


def test_invert_moment_map_rejects_non_interior(binomial):
    with pytest.raises(NotInterior) as exc:
        invert_moment_map(binomial, [2])
    assert exc.value.location == "boundary"
    with pytest.raises(NotInterior) as exc:
        invert_moment_map(binomial, [3])
    assert exc.value.location == "outside"


def test_rate_function_examples(binomial, simple_walk):
    assert rate_function(binomial, [1]) == pytest.approx(0.0, abs=1e-14)
    assert rate_function(simple_walk, [0]) == pytest.approx(0.0, abs=1e-14)
    expected = 0.75 * math.log(3.0) - math.log(2.0)
    assert rate_function(simple_walk, [Fraction(1, 2)]) == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(0.1308, abs=1e-4)


def test_rate_function_boundary_and_outside(simple_walk):
    with pytest.raises(BoundaryUnsupported):
        rate_function(simple_walk, [1])
    with pytest.raises(NotInterior):
        rate_function(simple_walk, [2])


def test_rate_matches_supremum_scan(simple_walk):
    x = [Fraction(1, 2)]
    assert rate_by_supremum(simple_walk, x) == pytest.approx(rate_function(simple_walk, x), abs=1e-6)


def test_objective_is_minimized_at_dual_point(binomial):
    x = [Fraction(3, 2)]
    dual = invert_moment_map(binomial, x)
    at_min = objective(binomial, x, dual.tau)
    assert at_min == pytest.approx(dual.delta)
    for shift in (-0.3, -0.01, 0.01, 0.3):
        assert objective(binomial, x, dual.tau + shift) > at_min


def test_rate_is_symmetric_for_binomial(binomial):
    left = rate_function(binomial, [Fraction(1, 3)])
    right = rate_function(binomial, [Fraction(5, 3)])
    assert left == pytest.approx(right, rel=1e-12)


def test_dual_solver_property_suite():
    rng = np.random.default_rng(20240517)
    for _ in range(100):
        s = random_step_set(rng)
        coeffs = rng.dirichlet(np.full(len(s.steps), 2.0))
        x = coeffs @ s.steps_array
        dual = invert_moment_map(s, list(x))

        ev = eval_character(s, dual.tau)
        assert np.max(np.abs(ev.gradient - x)) <= 1e-10
        assert np.min(np.linalg.eigvalsh(ev.hessian)) > 0
        assert dual.rate == pytest.approx(max(s.log_total_weight - dual.delta, 0.0), abs=1e-12)

        h = 1e-6
        for i in range(s.dim):
            e = np.zeros(s.dim)
            e[i] = h
            fd = (eval_character(s, dual.tau + e).log_value - eval_character(s, dual.tau - e).log_value) / (2 * h)
            assert fd == pytest.approx(ev.gradient[i], rel=1e-6, abs=1e-8)


def test_legendre_identity_against_supremum():
    rng = np.random.default_rng(7)
    for _ in range(10):
        s = random_step_set(rng)
        coeffs = rng.dirichlet(np.full(len(s.steps), 3.0))
        x = list(coeffs @ s.steps_array)
        dual = invert_moment_map(s, x)
        assert rate_by_supremum(s, x, radius=max(8.0, 2 * float(np.max(np.abs(dual.tau))))) == pytest.approx(
            dual.rate, abs=1e-6
        )


def test_newton_reaches_default_tolerance_on_skewed_pentagon():
    s = build_step_set(2, [[-1, -1], [1, -3], [1, 4], [3, 1], [4, -5]], [2, "9/2", 9, "5/3", 10])
    x = [1.805497612100829, -2.298857201171992]
    dual = invert_moment_map(s, x)
    assert dual.grad_residual <= 1e-12
    assert dual.iterations < 50
    assert dual.tau == pytest.approx([-0.33, -0.20], abs=0.05)
    assert np.min(np.linalg.eigvalsh(dual.hessian)) > 1.0


def test_newton_converges_on_random_interior_points():
    rng = np.random.default_rng(11)
    for _ in range(300):
        s = random_step_set(rng)
        x = list(rng.dirichlet(np.full(len(s.steps), 1.5)) @ s.steps_array)
        assert invert_moment_map(s, x).grad_residual <= 1e-12


def test_hessian_is_the_jacobian_of_the_moment_map():
    rng = np.random.default_rng(3)
    h = 1e-5
    for _ in range(30):
        s = random_step_set(rng)
        tau = rng.uniform(-1.0, 1.0, size=s.dim)
        hessian = eval_character(s, tau).hessian
        for i in range(s.dim):
            e = np.zeros(s.dim)
            e[i] = h
            column = (eval_character(s, tau + e).gradient - eval_character(s, tau - e).gradient) / (2 * h)
            assert column == pytest.approx(hessian[:, i], rel=1e-5, abs=1e-5)


def test_dual_objective_is_convex():
    rng = np.random.default_rng(5)
    for _ in range(30):
        s = random_step_set(rng)
        x = list(rng.dirichlet(np.full(len(s.steps), 2.0)) @ s.steps_array)
        a, b = rng.uniform(-2.0, 2.0, size=(2, s.dim))
        for t in (0.25, 0.5, 0.75):
            mixed = objective(s, x, t * a + (1 - t) * b)
            assert mixed <= t * objective(s, x, a) + (1 - t) * objective(s, x, b) + 1e-10
