from typing import List, NamedTuple, Optional, Sequence, Union

import numpy as np

ORDER_EXPONENTS = {
    "1/N": 1.0,
    "1/sqrt(N)": 0.5,
}


class ConvergenceStats(NamedTuple):
    """Remainder law |ratio - 1| <= C * N^-p checked along an N sweep."""
    ns: List[int]
    errors: List[float]
    exponent: float
    constant: float
    bound_holds: bool
    monotone: bool
    last_error: Optional[float]


def order_exponent(order: Union[str, float]) -> float:
    if isinstance(order, str):
        if order in ORDER_EXPONENTS:
            return ORDER_EXPONENTS[order]
        if order.startswith("N^-"):
            return float(order[3:])
        raise ValueError(f"Unknown remainder order: {order}")
    return float(order)


def fit_remainder(
    ns: Sequence[int],
    ratios: Sequence[float],
    order: Union[str, float] = "1/N",
    slack: float = 1e-12,
) -> ConvergenceStats:
    """Fits C on the smallest N and checks the bound and monotonicity for the rest."""
    if len(ns) != len(ratios):
        raise ValueError("ns and ratios must have the same length.")
    if not ns:
        return ConvergenceStats([], [], order_exponent(order), 0.0, True, True, None)

    p = order_exponent(order)
    n_arr = np.asarray(ns, dtype=float)
    errors = np.abs(np.asarray(ratios, dtype=float) - 1.0)
    scale = n_arr**-p
    constant = float(errors[0] / scale[0])
    bound = constant * scale * (1.0 + slack) + slack
    return ConvergenceStats(
        ns=[int(n) for n in ns],
        errors=[float(e) for e in errors],
        exponent=p,
        constant=constant,
        bound_holds=bool(np.all(errors <= bound)),
        monotone=bool(np.all(np.diff(errors) <= slack)),
        last_error=float(errors[-1]),
    )
