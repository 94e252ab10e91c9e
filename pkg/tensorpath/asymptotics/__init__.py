from .models import AsymptoticEstimate, RegimeDecision
from .regimes import classify_regime, center_distance
from .estimators import (
    estimate_central_limit,
    estimate_irreducible_cl,
    estimate_irreducible_sd,
    estimate_moderate_deviation,
    estimate_strong_deviation,
    estimate_strong_deviation_auto,
    estimate_weight_multiplicity,
)
from .convergence import ConvergenceStats, fit_remainder

__all__ = [
    "AsymptoticEstimate",
    "RegimeDecision",
    "classify_regime",
    "center_distance",
    "estimate_central_limit",
    "estimate_irreducible_cl",
    "estimate_irreducible_sd",
    "estimate_moderate_deviation",
    "estimate_strong_deviation",
    "estimate_strong_deviation_auto",
    "estimate_weight_multiplicity",
    "ConvergenceStats",
    "fit_remainder",
]
