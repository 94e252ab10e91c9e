from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np
from scipy.special import logsumexp

from tensorpath.lattice.polytope import classify_point
from tensorpath.lattice.step_set import WeightedStepSet
from tensorpath.sdk.exceptions import (
    BoundaryUnsupported,
    DimensionMismatch,
    NoConvergence,
    NonFiniteInput,
    NotInterior,
)
from tensorpath.utils.common import RationalVector

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 200
TAU_CAP = 1e4
ARMIJO_SLOPE = 1e-4
ARMIJO_FACTOR = 0.5
MIN_STEP_LENGTH = 1e-10
FLAT_DECREASE = 1e-13


class CharacterEvaluation(NamedTuple):
    """k(tau) with its log, gradient (moment map) and Hessian of log k."""
    tau: np.ndarray
    value: float
    log_value: float
    gradient: np.ndarray
    hessian: np.ndarray


class DualPoint(NamedTuple):
    x: np.ndarray
    tau: np.ndarray
    delta: float
    hessian: np.ndarray
    hessian_det: float
    rate: float
    grad_residual: float
    iterations: int


def _as_tau(s: WeightedStepSet, tau: Sequence[float]) -> np.ndarray:
    arr = np.asarray(tau, dtype=float).reshape(-1)
    if arr.shape != (s.dim,):
        raise DimensionMismatch(f"tau has {arr.size} entries, expected {s.dim}.")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"tau {arr.tolist()} is not finite.")
    return arr


def eval_character(s: WeightedStepSet, tau: Sequence[float]) -> CharacterEvaluation:
    """Evaluates k(tau) = sum c(b) exp(<b, tau>) through a max-shifted log-sum-exp."""
    t = _as_tau(s, tau)
    log_terms = s.log_weights + s.steps_array @ t
    log_k = float(logsumexp(log_terms))
    probs = np.exp(log_terms - log_k)
    gradient = probs @ s.steps_array
    centered = s.steps_array - gradient
    hessian = (centered * probs[:, None]).T @ centered
    hessian = 0.5 * (hessian + hessian.T)
    with np.errstate(over="ignore"):
        value = float(np.exp(log_k))
    return CharacterEvaluation(tau=t, value=value, log_value=log_k, gradient=gradient, hessian=hessian)


def center_of_mass(s: WeightedStepSet) -> RationalVector:
    """m*_S = (1/V(S)) sum c(b) b, exact."""
    total = s.total_weight
    return tuple(
        sum((w * step[i] for step, w in zip(s.steps, s.weights)), Fraction(0)) / total
        for i in range(s.dim)
    )


def objective(s: WeightedStepSet, x: Sequence[float], tau: Sequence[float]) -> float:
    """f_x(tau) = log k(tau) - <x, tau>."""
    t = _as_tau(s, tau)
    xf = np.asarray([float(v) for v in x], dtype=float)
    return float(logsumexp(s.log_weights + s.steps_array @ t)) - float(xf @ t)


def invert_moment_map(
    s: WeightedStepSet,
    x: Sequence,
    tol: float = DEFAULT_TOL,
    max_iterations: int = MAX_ITERATIONS,
) -> DualPoint:
    """Solves grad log k(tau) = x by damped Newton on f_x, starting at tau = 0."""
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}.")
    point = classify_point(s, x)
    if not point.is_interior:
        raise NotInterior(
            f"Point {[str(c) for c in point.coords]} is {point.location} of the step polytope.",
            location=point.location,
        )
    xf = np.array([float(c) for c in point.coords], dtype=float)

    tau = np.zeros(s.dim)
    ev = eval_character(s, tau)
    residual_vec = ev.gradient - xf
    residual = float(np.max(np.abs(residual_vec)))
    best_tau, best_residual = tau.copy(), residual
    iterations = 0

    while residual > tol:
        if iterations >= max_iterations:
            raise NoConvergence("Newton iteration hit the iteration limit", best_tau, best_residual, iterations)
        iterations += 1

        step = np.linalg.solve(ev.hessian, -residual_vec)
        trial = tau + step
        trial_ev = eval_character(s, trial)
        trial_residual = float(np.max(np.abs(trial_ev.gradient - xf)))

        if trial_residual >= residual:
            f0 = ev.log_value - float(xf @ tau)
            slope = float(residual_vec @ step)
            if -0.5 * slope <= FLAT_DECREASE * max(1.0, abs(f0)):
                # f_x cannot resolve the decrease any more
                raise NoConvergence("Line search stalled", best_tau, best_residual, iterations)
            t = 1.0
            while trial_ev.log_value - float(xf @ trial) > f0 + ARMIJO_SLOPE * t * slope:
                t *= ARMIJO_FACTOR
                if t < MIN_STEP_LENGTH:
                    raise NoConvergence("Line search stalled", best_tau, best_residual, iterations)
                trial = tau + t * step
                trial_ev = eval_character(s, trial)

        if np.linalg.norm(trial) > TAU_CAP:
            raise NoConvergence("Dual variable diverged past the cap", best_tau, best_residual, iterations)

        tau, ev = trial, trial_ev
        residual_vec = ev.gradient - xf
        residual = float(np.max(np.abs(residual_vec)))
        if residual < best_residual:
            best_tau, best_residual = tau.copy(), residual

    delta = ev.log_value - float(xf @ tau)
    rate = max(s.log_total_weight - delta, 0.0)
    return DualPoint(
        x=xf,
        tau=tau,
        delta=delta,
        hessian=ev.hessian,
        hessian_det=float(np.linalg.det(ev.hessian)),
        rate=rate,
        grad_residual=residual,
        iterations=iterations,
    )


def rate_function(s: WeightedStepSet, x: Sequence, tol: float = DEFAULT_TOL) -> float:
    """I_S(x) = log V(S) - delta(x) for x in the interior of conv(S)."""
    point = classify_point(s, x)
    if point.location == "boundary":
        raise BoundaryUnsupported(
            f"Rate function at boundary point {[str(c) for c in point.coords]} is not resolved."
        )
    if point.location == "outside":
        raise NotInterior(
            f"Point {[str(c) for c in point.coords]} lies outside the step polytope.",
            location="outside",
        )
    return invert_moment_map(s, point.coords, tol=tol).rate
