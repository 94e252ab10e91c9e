from fractions import Fraction
import math
from typing import Literal, Sequence

import numpy as np

from tensorpath.asymptotics.models import AsymptoticEstimate
from tensorpath.asymptotics.regimes import (
    DEFAULT_CL_CUT,
    DEFAULT_MD_CUT,
    DEFAULT_MD_SMAX,
    center_distance,
    classify_regime,
    s_exponent,
)
from tensorpath.dual.solver import DEFAULT_TOL, center_of_mass, eval_character, invert_moment_map
from tensorpath.groups.freudenthal import WeightDiagram
from tensorpath.lattice.polytope import classify_point
from tensorpath.lattice.step_set import WeightedStepSet, in_difference_lattice, support_test
from tensorpath.sdk.exceptions import (
    CoordinateMismatch,
    DimensionMismatch,
    EstimatorError,
    FNotInDifferenceLattice,
    NotAWeight,
    NotInStepSet,
    NotSemisimple,
    SupportViolation,
)
from tensorpath.utils.common import vec_scale, vec_sub

DEGENERATE_TOL = 1e-9

SD_ORDER = "1+O(N^-1)"
IRRED_CL_ORDER = "1+O(N^-1/2)"


def _gaussian_log_prefactor(m: int, N: int, pi_order: int, det_a: float) -> float:
    return -0.5 * m * math.log(2.0 * math.pi * N) + math.log(pi_order) - 0.5 * math.log(det_a)


def _local_limit_order(s_exp) -> str:
    s_val = 0.0 if s_exp is None else max(s_exp, 0.0)
    if s_val <= 0.5:
        return f"1+O(N^-(1-s)), s={s_val:.3f}"
    if s_val <= 2.0 / 3.0:
        return f"1+o(N^(3s-2)), s={s_val:.3f}"
    return f"unbounded (s={s_val:.3f} > 2/3)"


def _require_support(s: WeightedStepSet, N: int, gamma: Sequence) -> None:
    if not support_test(s, N, gamma):
        raise SupportViolation(f"{list(gamma)} fails the congruence condition at N={N}; the exact count is 0.")


def estimate_strong_deviation(
    s: WeightedStepSet,
    alpha: Sequence[int],
    f: Sequence[int],
    N: int,
    tol: float = DEFAULT_TOL,
) -> AsymptoticEstimate:
    """P_N(N*alpha + f) for a fixed interior step alpha and a shift f in L(S)*."""
    if len(alpha) != s.dim or len(f) != s.dim:
        raise DimensionMismatch(f"alpha and f must have length {s.dim}.")
    if not s.contains(alpha):
        raise NotInStepSet(f"{list(alpha)} is not a step of the step set.")
    if not in_difference_lattice(s, f):
        raise FNotInDifferenceLattice(f"Shift {list(f)} is not in the difference lattice.")
    dual = invert_moment_map(s, alpha, tol=tol)
    linear = -float(np.dot([float(c) for c in f], dual.tau))
    return AsymptoticEstimate.compose(
        N=N,
        exponent_per_step=dual.delta,
        linear_term=linear,
        log_prefactor=_gaussian_log_prefactor(s.dim, N, s.pi_order, dual.hessian_det),
        regime="SD",
        error_order=SD_ORDER,
    )


def _saddle_estimate(s: WeightedStepSet, gamma: Sequence, N: int, tol: float, regime, error_order: str) -> AsymptoticEstimate:
    _require_support(s, N, gamma)
    x = [Fraction(g) / N for g in gamma]
    dual = invert_moment_map(s, x, tol=tol)
    return AsymptoticEstimate.compose(
        N=N,
        exponent_per_step=dual.delta,
        linear_term=0.0,
        log_prefactor=_gaussian_log_prefactor(s.dim, N, s.pi_order, dual.hessian_det),
        regime=regime,
        error_order=error_order,
    )


def estimate_moderate_deviation(
    s: WeightedStepSet,
    gamma: Sequence[int],
    N: int,
    tol: float = DEFAULT_TOL,
) -> AsymptoticEstimate:
    """Saddle-point formula with delta and A taken at the N-dependent point gamma/N."""
    s_exp = s_exponent(center_distance(s, gamma, N), N)
    order = f"1+O(N^-(1-s)), s={0.0 if s_exp is None else max(s_exp, 0.0):.3f}"
    return _saddle_estimate(s, gamma, N, tol, "MD", order)


def estimate_central_limit(s: WeightedStepSet, gamma: Sequence[int], N: int) -> AsymptoticEstimate:
    """Local CLT with the fixed matrix A = A(m*_S)."""
    _require_support(s, N, gamma)
    center = center_of_mass(s)
    d = np.array([float(Fraction(g) - N * c) for g, c in zip(gamma, center)])
    hessian = eval_character(s, np.zeros(s.dim)).hessian
    quad = float(d @ np.linalg.solve(hessian, d))
    return AsymptoticEstimate.compose(
        N=N,
        exponent_per_step=s.log_total_weight,
        linear_term=-quad / (2.0 * N),
        log_prefactor=_gaussian_log_prefactor(s.dim, N, s.pi_order, float(np.linalg.det(hessian))),
        regime="CL",
        error_order=_local_limit_order(s_exponent(float(np.linalg.norm(d)), N)),
    )


def _nearest_step(s: WeightedStepSet, gamma: Sequence, N: int):
    def cost(beta):
        return (sum((Fraction(g) - N * b) ** 2 for g, b in zip(gamma, beta)), beta)
    return min(s.steps, key=cost)


def estimate_strong_deviation_auto(s: WeightedStepSet, gamma: Sequence[int], N: int, tol: float = DEFAULT_TOL) -> AsymptoticEstimate:
    """SD estimate for an arbitrary target.

    Uses the ray form N*alpha + f when the nearest step alpha is interior and
    f = gamma - N*alpha is a short vector of L(S)*; otherwise the saddle-point
    formula at gamma/N.
    """
    alpha = _nearest_step(s, gamma, N)
    f = tuple(int(Fraction(g)) - N * b for g, b in zip(gamma, alpha))
    if (
        classify_point(s, alpha).is_interior
        and in_difference_lattice(s, f)
        and sum(c * c for c in f) <= N
    ):
        return estimate_strong_deviation(s, alpha, f, N, tol=tol)
    return _saddle_estimate(s, gamma, N, tol, "SD", SD_ORDER)


def estimate_weight_multiplicity(
    d: WeightDiagram,
    nu: Sequence[int],
    N: int,
    regime: Literal["auto", "CL", "MD", "SD"] = "auto",
    cl_cut: float = DEFAULT_CL_CUT,
    md_cut: float = DEFAULT_MD_CUT,
    md_smax: float = DEFAULT_MD_SMAX,
    tol: float = DEFAULT_TOL,
) -> AsymptoticEstimate:
    """m_N(lambda; nu) through the lattice-path estimator on S_lambda at nu - N*lambda."""
    r = d.root_system
    if len(nu) != r.rank_t:
        raise CoordinateMismatch(f"Weight {list(nu)} has length {len(nu)}, expected {r.rank_t}.")
    gamma = r.to_lattice(vec_sub(nu, vec_scale(N, d.highest_weight)))
    s = d.step_set
    if regime == "auto":
        regime = classify_regime(s, gamma, N, cl_cut=cl_cut, md_cut=md_cut, md_smax=md_smax).regime
    if regime == "CL":
        return estimate_central_limit(s, gamma, N)
    if regime == "MD":
        return estimate_moderate_deviation(s, gamma, N, tol=tol)
    return estimate_strong_deviation_auto(s, gamma, N, tol=tol)


def estimate_irreducible_sd(
    d: WeightDiagram,
    nu: Sequence[int],
    N: int,
    tol: float = DEFAULT_TOL,
) -> AsymptoticEstimate:
    """a_N(lambda; N*nu) for a dominant weight nu of V_lambda interior to its polytope."""
    r = d.root_system
    nu = r.require_dominant(nu)
    if d.multiplicity(nu) == 0:
        raise NotAWeight(f"{list(nu)} is not a weight of V_{list(d.highest_weight)}.")
    x = r.to_lattice(vec_sub(nu, d.highest_weight))
    s = d.step_set
    dual = invert_moment_map(s, x, tol=tol)

    tau_t = r.tau_from_lattice(dual.tau)
    weyl = r.weyl_denominator(tau_t)
    base = _gaussian_log_prefactor(s.dim, N, r.pi_group_order_g(), dual.hessian_det)
    if weyl <= DEGENERATE_TOL:
        return AsymptoticEstimate.compose(
            N=N,
            exponent_per_step=dual.delta,
            linear_term=0.0,
            log_prefactor=float("-inf"),
            regime="IRRED_SD",
            error_order=SD_ORDER,
            degenerate=True,
        )
    rho_pairing = float(np.dot([float(c) for c in r.rho], tau_t))
    return AsymptoticEstimate.compose(
        N=N,
        exponent_per_step=dual.delta,
        linear_term=0.0,
        log_prefactor=base + math.log(weyl) - rho_pairing,
        regime="IRRED_SD",
        error_order=SD_ORDER,
    )


def estimate_irreducible_cl(d: WeightDiagram, mu: Sequence[int], N: int) -> AsymptoticEstimate:
    """Central-limit formula for a_N(lambda; mu) with |mu| = O(sqrt(N)); semisimple groups only."""
    r = d.root_system
    if not r.semisimple:
        raise NotSemisimple(f"{r.name} is not semisimple; the central-limit formula does not apply.")
    mu = r.require_dominant(mu)
    s = d.step_set
    shift = r.lattice_coordinates(vec_sub(mu, vec_scale(N, d.highest_weight)))
    if any(c.denominator != 1 for c in shift) or not support_test(s, N, shift):
        raise SupportViolation(f"{list(mu)} is outside the support class of V_{list(d.highest_weight)}^{N}.")

    hessian = eval_character(s, np.zeros(s.dim)).hessian
    rho_lat = np.array([float(c) for c in r.lattice_coordinates(r.rho)])
    log_root_factor = 0.0
    for alpha in r.positive_roots:
        alpha_lat = np.array([float(c) for c in r.lattice_coordinates(alpha)])
        pairing = float(rho_lat @ np.linalg.solve(hessian, alpha_lat))
        if pairing <= 0:
            raise EstimatorError(f"Non-positive root pairing {pairing} for root {alpha}.")
        log_root_factor += math.log(pairing)
    shifted = np.array([float(c) for c in r.lattice_coordinates([Fraction(a) + b for a, b in zip(mu, r.rho)])])
    quad = float(shifted @ np.linalg.solve(hessian, shifted))

    log_prefactor = (
        math.log(r.pi_group_order_g())
        + math.log(r.dim_weyl(mu))
        + log_root_factor
        - 0.5 * math.log(float(np.linalg.det(hessian)))
        - 0.5 * s.dim * math.log(2.0 * math.pi)
        - 0.5 * r.dim_group * math.log(N)
    )
    return AsymptoticEstimate.compose(
        N=N,
        exponent_per_step=s.log_total_weight,
        linear_term=-quad / (2.0 * N),
        log_prefactor=log_prefactor,
        regime="IRRED_CL",
        error_order=IRRED_CL_ORDER,
    )
