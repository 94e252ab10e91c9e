from fractions import Fraction
from functools import lru_cache
from typing import Literal, NamedTuple, Optional, Sequence, Tuple

import sympy
from sympy.solvers.simplex import InfeasibleLPError, lpmax

from tensorpath.sdk.exceptions import DimensionMismatch, NonFiniteInput
from tensorpath.lattice.step_set import WeightedStepSet
from tensorpath.utils.common import RationalVector, from_sympy, parse_rational

Location = Literal["interior", "boundary", "outside"]


class PolytopePoint(NamedTuple):
    """A point tagged by its position relative to P = conv(S)."""
    coords: RationalVector
    location: Location

    @property
    def is_interior(self) -> bool:
        return self.location == "interior"


@lru_cache(maxsize=65536)
def _max_slack(points: Sequence[Tuple[int, ...]], x: RationalVector) -> Optional[Fraction]:
    """Solves max eps s.t. sum_b (u_b + eps) b = x, sum_b (u_b + eps) = 1, u, eps >= 0.

    Returns None when x is outside conv(points); otherwise eps*, which is positive
    iff x is a combination with all coefficients strictly positive.
    """
    u = sympy.symbols(f"u0:{len(points)}")
    eps = sympy.Symbol("eps")
    coeffs = [ui + eps for ui in u]
    constraints = [sympy.Eq(sum(coeffs), 1), eps >= 0, *(ui >= 0 for ui in u)]
    for i, xi in enumerate(x):
        lhs = sum(c * p[i] for c, p in zip(coeffs, points) if p[i] != 0)
        constraint = sympy.Eq(lhs, sympy.Rational(xi.numerator, xi.denominator))
        if constraint is sympy.false:
            return None
        if constraint is not sympy.true:
            constraints.append(constraint)
    try:
        value, _ = lpmax(eps, constraints)
    except InfeasibleLPError:
        return None
    return from_sympy(value)


def classify_point(s: WeightedStepSet, x: Sequence) -> PolytopePoint:
    """Exact interior/boundary/outside classification of ``x`` against conv(S)."""
    if len(x) != s.dim:
        raise DimensionMismatch(f"Point {list(x)} has length {len(x)}, expected {s.dim}.")
    try:
        coords = tuple(parse_rational(c) for c in x)
    except (ValueError, OverflowError) as e:
        raise NonFiniteInput(f"Point {list(x)} is not finite: {e}") from e

    eps = _max_slack(s.steps, coords)
    if eps is None:
        location: Location = "outside"
    elif eps > 0:
        location = "interior"
    else:
        location = "boundary"
    return PolytopePoint(coords=coords, location=location)
