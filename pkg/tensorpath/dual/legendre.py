import itertools
from typing import Sequence

import numpy as np
from scipy.optimize import minimize
from scipy.special import logsumexp

from tensorpath.lattice.step_set import WeightedStepSet
from tensorpath.sdk.exceptions import DimensionMismatch

GRID_RADIUS = 8.0
GRID_POINTS = {1: 161, 2: 41}


def rate_by_supremum(
    s: WeightedStepSet,
    x: Sequence,
    radius: float = GRID_RADIUS,
) -> float:
    """Evaluates sup_tau {<tau, x> - log(k(tau)/V(S))} without the moment map.

    A coarse grid scan over [-radius, radius]^m picks the start, then
    Nelder-Mead polishes it. Independent of the Newton solver.
    """
    xf = np.asarray([float(v) for v in x], dtype=float)
    if xf.shape != (s.dim,):
        raise DimensionMismatch(f"Point has {xf.size} entries, expected {s.dim}.")

    def dual_objective(tau: np.ndarray) -> float:
        return float(logsumexp(s.log_weights + s.steps_array @ tau)) - float(xf @ tau)

    n = GRID_POINTS.get(s.dim, 15)
    axis = np.linspace(-radius, radius, n)
    best_tau = np.zeros(s.dim)
    best_value = dual_objective(best_tau)
    for node in itertools.product(axis, repeat=s.dim):
        tau = np.array(node)
        value = dual_objective(tau)
        if value < best_value:
            best_tau, best_value = tau, value

    result = minimize(
        dual_objective,
        best_tau,
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 20000, "maxfev": 40000},
    )
    minimum = min(float(result.fun), best_value)
    return s.log_total_weight - minimum
