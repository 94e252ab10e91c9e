from fractions import Fraction
import math
from typing import Sequence

from tensorpath.asymptotics.models import RegimeDecision
from tensorpath.dual.solver import center_of_mass
from tensorpath.lattice.polytope import classify_point
from tensorpath.lattice.step_set import WeightedStepSet
from tensorpath.sdk.exceptions import DimensionMismatch

DEFAULT_CL_CUT = 3.0
DEFAULT_MD_CUT = 1.0
DEFAULT_MD_SMAX = 0.75


def center_distance(s: WeightedStepSet, gamma: Sequence, N: int) -> float:
    """||gamma - N m*_S|| in lattice coordinates."""
    if len(gamma) != s.dim:
        raise DimensionMismatch(f"Target {list(gamma)} has length {len(gamma)}, expected {s.dim}.")
    center = center_of_mass(s)
    squared = sum(((Fraction(g) - N * c) ** 2 for g, c in zip(gamma, center)), Fraction(0))
    return math.sqrt(squared)


def s_exponent(distance: float, N: int):
    if distance <= 0.0 or N <= 1:
        return None
    return math.log(distance) / math.log(N)


def classify_regime(
    s: WeightedStepSet,
    gamma: Sequence,
    N: int,
    cl_cut: float = DEFAULT_CL_CUT,
    md_cut: float = DEFAULT_MD_CUT,
    md_smax: float = DEFAULT_MD_SMAX,
) -> RegimeDecision:
    """CL within cl_cut*sqrt(N) of the center, MD up to md_cut*N^md_smax with
    gamma/N interior, SD otherwise."""
    distance = center_distance(s, gamma, N)
    if distance <= cl_cut * math.sqrt(N):
        regime = "CL"
    elif distance <= md_cut * N**md_smax and classify_point(
        s, [Fraction(g) / N for g in gamma]
    ).is_interior:
        regime = "MD"
    else:
        regime = "SD"
    return RegimeDecision(
        gamma=tuple(int(Fraction(g)) for g in gamma),
        N=N,
        distance=distance,
        s_exponent=s_exponent(distance, N),
        regime=regime,
    )
