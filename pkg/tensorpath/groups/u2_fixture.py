import math
from typing import Tuple

from scipy.optimize import bisect

from tensorpath.sdk.exceptions import JOutOfRange

# below this |tau| the sinh/coth closed forms are replaced by their Taylor expansions
_SERIES_CUTOFF = 1e-3


def _log_sinh(x: float) -> float:
    return x + math.log1p(-math.exp(-2.0 * x)) - math.log(2.0)


class U2GoldenData:
    """Closed-form U(2) references for lambda with gap n = lambda_1 - lambda_2.

    ``tau``, ``hessian`` and ``a_lambda`` use the Euclidean normalization of t*
    (tau written as tau*alpha with <alpha, alpha> = 2). The ``*_lattice``
    variants are in coordinates of the basis alpha of L*, where
    tau_lattice = 2 tau and hessian_lattice = hessian / 2.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"Gap n must be at least 1, got {n}.")
        self.n = n

    @property
    def highest_weight(self) -> Tuple[int, int]:
        return (self.n, 0)

    def weight(self, j: int) -> Tuple[int, int]:
        """nu_j = lambda - j*alpha."""
        return (self.n - j, j)

    @property
    def admissible_j(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n // 2 + 1))

    def _check_j(self, j: int) -> None:
        if not 1 <= j <= self.n / 2:
            raise JOutOfRange(f"j must satisfy 1 <= j <= {self.n}/2, got {j}.")

    def h(self, tau: float) -> float:
        n = self.n
        if abs(tau) < _SERIES_CUTOFF:
            return sum(math.exp(-2.0 * k * tau) for k in range(n + 1))
        return math.exp(-n * tau) * math.sinh((n + 1) * tau) / math.sinh(tau)

    def f(self, tau: float) -> float:
        """h'(tau) / (2 h(tau)), written with coth to avoid overflow."""
        n = self.n
        if abs(tau) < _SERIES_CUTOFF:
            return -n / 2 + n * (n + 2) * tau / 6 - ((n + 1) ** 4 - 1) * tau**3 / 90
        return ((n + 1) / math.tanh((n + 1) * tau) - 1.0 / math.tanh(tau)) / 2 - n / 2

    def tau(self, j: int) -> float:
        """The non-negative root of f(tau) = -j."""
        self._check_j(j)
        if 2 * j == self.n:
            return 0.0
        hi = 1.0
        while self.f(hi) + j < 0:
            hi *= 2.0
        return bisect(lambda t: self.f(t) + j, 0.0, hi, xtol=1e-15, maxiter=500)

    def delta(self, j: int) -> float:
        """-(n - 2j) tau_j + log(sinh((n+1) tau_j) / sinh tau_j)."""
        t = self.tau(j)
        n = self.n
        if t == 0.0:
            return math.log(n + 1)
        return -(n - 2 * j) * t + _log_sinh((n + 1) * t) - _log_sinh(t)

    def hessian(self, j: int) -> float:
        t = self.tau(j)
        n = self.n
        if abs(t) < _SERIES_CUTOFF:
            return n * (n + 2) / 6 - ((n + 1) ** 4 - 1) * t**2 / 30
        return 0.5 / math.sinh(t) ** 2 - 0.5 * (n + 1) ** 2 / math.sinh((n + 1) * t) ** 2

    def a_lambda(self, j: int) -> float:
        """Prefactor 2 e^{-tau} sinh(tau) / sqrt(A); zero exactly when n = 2j."""
        t = self.tau(j)
        return 2.0 * math.exp(-t) * math.sinh(t) / math.sqrt(self.hessian(j))

    def tau_lattice(self, j: int) -> float:
        return 2.0 * self.tau(j)

    def hessian_lattice(self, j: int) -> float:
        return self.hessian(j) / 2.0

    def lattice_prefactor(self, j: int) -> float:
        return math.sqrt(2.0) * self.a_lambda(j)


def u2_fixture(n: int) -> U2GoldenData:
    return U2GoldenData(n)
