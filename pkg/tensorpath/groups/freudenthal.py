from fractions import Fraction
from functools import cached_property
import itertools
import threading
from typing import Dict, List, Sequence, Tuple

import numpy as np
from scipy.special import logsumexp

from tensorpath.lattice.step_set import WeightedStepSet, build_step_set
from tensorpath.sdk.exceptions import OracleError
from tensorpath.utils.common import IntVector, RationalVector, vec_sub
from .base import RootSystem

_cache_lock = threading.Lock()
_dominant_cache: Dict[Tuple[str, IntVector], Dict[IntVector, int]] = {}


class WeightDiagram:
    """Weights of V_lambda with multiplicities, and the shifted step set S_lambda."""

    def __init__(self, root_system: RootSystem, highest_weight: IntVector, entries: Sequence[Tuple[IntVector, int]]):
        self.root_system = root_system
        self.highest_weight = highest_weight
        self.entries: Tuple[Tuple[IntVector, int], ...] = tuple(entries)
        self._mult = dict(self.entries)

    def multiplicity(self, mu: Sequence) -> int:
        coords = [Fraction(c) for c in mu]
        if len(coords) != len(self.highest_weight) or any(c.denominator != 1 for c in coords):
            return 0
        return self._mult.get(tuple(int(c) for c in coords), 0)

    @property
    def weights(self) -> List[IntVector]:
        return [mu for mu, _ in self.entries]

    @cached_property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    @cached_property
    def q_star(self) -> RationalVector:
        """Center of mass of the weights (in t*-coordinates)."""
        rank = len(self.highest_weight)
        return tuple(
            sum((Fraction(mu[i] * m) for mu, m in self.entries), Fraction(0)) / self.dimension
            for i in range(rank)
        )

    @cached_property
    def step_set(self) -> WeightedStepSet:
        """S_lambda = {mu - lambda} in L*-coordinates with weights m_1(lambda; mu).

        Raises SpanDeficient when lambda sits on a wall and the shifts degenerate.
        """
        r = self.root_system
        steps = [r.to_lattice(vec_sub(mu, self.highest_weight)) for mu, _ in self.entries]
        return build_step_set(r.m, steps, [m for _, m in self.entries])

    def character(self, tau_t: Sequence[float]) -> float:
        """sum_mu m_1(lambda; mu) exp(<mu, tau>)."""
        t = np.asarray(tau_t, dtype=float)
        exponents = np.array([float(np.dot(mu, t)) for mu, _ in self.entries])
        mults = np.array([float(m) for _, m in self.entries])
        return float(np.exp(logsumexp(exponents, b=mults)))


def _depth_bounds(r: RootSystem, lam: IntVector) -> List[int]:
    bounds = [0] * len(r.simple_roots)
    for w in r.weyl_elements:
        coeffs = r.simple_root_coefficients(vec_sub(lam, w.apply(lam)))
        for i, c in enumerate(coeffs):
            bounds[i] = max(bounds[i], int(c))
    return bounds


def dominant_weights(r: RootSystem, lam: Sequence) -> List[IntVector]:
    """Dominant mu <= lambda, ordered by depth (number of simple roots subtracted)."""
    lam = r.require_dominant(lam)
    found = []
    for ks in itertools.product(*(range(b + 1) for b in _depth_bounds(r, lam))):
        mu = tuple(
            lam[i] - sum(k * a[i] for k, a in zip(ks, r.simple_roots))
            for i in range(r.rank_t)
        )
        if r.is_dominant(mu):
            found.append((sum(ks), mu))
    found.sort(key=lambda item: (item[0], tuple(-c for c in item[1])))
    return [mu for _, mu in found]


def _dominant_multiplicities(r: RootSystem, lam: IntVector) -> Dict[IntVector, int]:
    key = (r.name, lam)
    with _cache_lock:
        cached = _dominant_cache.get(key)
    if cached is not None:
        return cached

    lam_rho = tuple(Fraction(a) + b for a, b in zip(lam, r.rho))
    top = r.inner(lam_rho, lam_rho)
    mults: Dict[IntVector, int] = {}

    def lookup(nu: RationalVector) -> int:
        dom = r.dominant_conjugate(nu)
        return mults.get(tuple(int(c) for c in dom), 0)

    for mu in dominant_weights(r, lam):
        if mu == lam:
            mults[mu] = 1
            continue
        acc = Fraction(0)
        for alpha in r.positive_roots:
            k = 1
            while True:
                nu = tuple(Fraction(c + k * a) for c, a in zip(mu, alpha))
                m_nu = lookup(nu)
                if m_nu == 0:
                    break
                acc += m_nu * r.inner(nu, alpha)
                k += 1
        mu_rho = tuple(Fraction(a) + b for a, b in zip(mu, r.rho))
        value = 2 * acc / (top - r.inner(mu_rho, mu_rho))
        if value.denominator != 1 or value < 0:
            raise OracleError(f"Freudenthal recursion produced {value} at {mu} for {r.name} {lam}.")
        if value:
            mults[mu] = int(value)

    with _cache_lock:
        _dominant_cache.setdefault(key, mults)
    return mults


def freudenthal_diagram(r: RootSystem, lam: Sequence) -> WeightDiagram:
    """Full weight diagram of V_lambda by Freudenthal's recursion and Weyl orbits."""
    lam = r.require_dominant(lam)
    entries: Dict[IntVector, int] = {}
    for mu, mult in _dominant_multiplicities(r, lam).items():
        for image in r.orbit(mu):
            entries[tuple(int(c) for c in image)] = mult
    ordered = sorted(entries.items(), key=lambda item: tuple(-c for c in item[0]))
    return WeightDiagram(r, lam, ordered)
