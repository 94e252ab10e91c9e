from abc import ABC, abstractmethod
from fractions import Fraction
from functools import cached_property
import math
from typing import Dict, List, NamedTuple, Sequence, Tuple

import numpy as np
import sympy

from tensorpath.sdk.exceptions import CoordinateMismatch, NotDominant
from tensorpath.utils.common import IntVector, RationalVector, from_sympy

Matrix = Tuple[RationalVector, ...]


class WeylElement(NamedTuple):
    """A Weyl group element as an exact matrix on t*-coordinates, with sgn(w)."""
    matrix: Matrix
    sign: int

    def apply(self, v: Sequence) -> RationalVector:
        return tuple(
            sum((row[j] * Fraction(v[j]) for j in range(len(v))), Fraction(0)) for row in self.matrix
        )


def _sympy_vector(v: Sequence) -> sympy.Matrix:
    return sympy.Matrix([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in v])


def _solve_columns(columns: Sequence[Sequence], v: Sequence) -> RationalVector:
    """Exact coefficients c with sum_i c_i columns[i] = v; ValueError if v is not in the span."""
    matrix = sympy.Matrix([[sympy.Rational(int(col[i])) for col in columns] for i in range(len(v))])
    solution, params = matrix.gauss_jordan_solve(_sympy_vector(v))
    if params.shape[0]:
        raise ValueError("Columns are linearly dependent.")
    return tuple(from_sympy(c) for c in solution)


class RootSystem(ABC):
    """Lie-theoretic data of a small-rank compact group.

    Weights are integer vectors in t*-coordinates fixed by each subclass; the
    invariant form is the Gram matrix ``gram`` in those coordinates. Elements
    of t are written in the dual coordinates, so <mu, tau> is the plain dot
    product of coordinate vectors.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def simple_roots(self) -> Tuple[IntVector, ...]:
        pass

    @property
    @abstractmethod
    def gram(self) -> Matrix:
        """Invariant inner product on t* in weight coordinates."""
        pass

    @property
    @abstractmethod
    def basis_xstar(self) -> Tuple[IntVector, ...]:
        """Integer basis of L*, the weight lattice inside the root subspace X*."""
        pass

    @property
    @abstractmethod
    def semisimple(self) -> bool:
        pass

    @property
    @abstractmethod
    def coordinates_help(self) -> str:
        pass

    @property
    def rank_t(self) -> int:
        return len(self.gram)

    @property
    def m(self) -> int:
        return len(self.basis_xstar)

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        return sum(
            (Fraction(u[i]) * self.gram[i][j] * Fraction(v[j])
             for i in range(self.rank_t) for j in range(self.rank_t)),
            Fraction(0),
        )

    def _reflection(self, alpha: IntVector) -> WeylElement:
        g_alpha = [sum((self.gram[i][j] * alpha[j] for j in range(self.rank_t)), Fraction(0))
                   for i in range(self.rank_t)]
        norm = self.inner(alpha, alpha)
        matrix = tuple(
            tuple((Fraction(1) if i == j else Fraction(0)) - 2 * alpha[i] * g_alpha[j] / norm
                  for j in range(self.rank_t))
            for i in range(self.rank_t)
        )
        return WeylElement(matrix=matrix, sign=-1)

    @cached_property
    def weyl_elements(self) -> Tuple[WeylElement, ...]:
        """Closure of the simple reflections, identity first."""
        identity = tuple(tuple(Fraction(int(i == j)) for j in range(self.rank_t)) for i in range(self.rank_t))
        generators = [self._reflection(a) for a in self.simple_roots]
        seen: Dict[Matrix, int] = {identity: 1}
        frontier = [WeylElement(identity, 1)]
        while frontier:
            nxt = []
            for w in frontier:
                for s in generators:
                    product = tuple(
                        tuple(sum((s.matrix[i][k] * w.matrix[k][j] for k in range(self.rank_t)), Fraction(0))
                              for j in range(self.rank_t))
                        for i in range(self.rank_t)
                    )
                    if product not in seen:
                        seen[product] = -w.sign
                        nxt.append(WeylElement(product, -w.sign))
            frontier = nxt
        ordered = sorted(seen, key=lambda mat: (mat != identity, mat))
        return tuple(WeylElement(mat, seen[mat]) for mat in ordered)

    def simple_root_coefficients(self, v: Sequence) -> RationalVector:
        try:
            return _solve_columns(self.simple_roots, v)
        except ValueError as e:
            raise CoordinateMismatch(f"{list(v)} is not in the span of the roots.") from e

    @cached_property
    def positive_roots(self) -> Tuple[IntVector, ...]:
        roots = set()
        for w in self.weyl_elements:
            for a in self.simple_roots:
                image = w.apply(a)
                if all(c >= 0 for c in self.simple_root_coefficients(image)):
                    roots.add(tuple(int(c) for c in image))
        return tuple(sorted(roots))

    @cached_property
    def rho(self) -> RationalVector:
        return tuple(
            sum((Fraction(r[i]) for r in self.positive_roots), Fraction(0)) / 2
            for i in range(self.rank_t)
        )

    def is_integral_weight(self, mu: Sequence) -> bool:
        return len(mu) == self.rank_t and all(Fraction(c).denominator == 1 for c in mu)

    def is_dominant(self, mu: Sequence) -> bool:
        return self.is_integral_weight(mu) and all(self.inner(mu, a) >= 0 for a in self.simple_roots)

    def require_dominant(self, mu: Sequence) -> IntVector:
        if not self.is_dominant(mu):
            raise NotDominant(f"{list(mu)} is not a dominant integral weight of {self.name}.")
        return tuple(int(c) for c in mu)

    def orbit(self, mu: Sequence) -> List[RationalVector]:
        return sorted({w.apply(mu) for w in self.weyl_elements})

    def dominant_conjugate(self, mu: Sequence) -> RationalVector:
        for image in self.orbit(mu):
            if all(self.inner(image, a) >= 0 for a in self.simple_roots):
                return image
        raise NotDominant(f"No dominant conjugate found for {list(mu)}.")

    # --- Root subspace coordinates ---

    def lattice_coordinates(self, v: Sequence) -> RationalVector:
        """Rational coordinates of v in X* w.r.t. basis_xstar."""
        if len(v) != self.rank_t:
            raise CoordinateMismatch(f"Weight {list(v)} has length {len(v)}, expected {self.rank_t}.")
        try:
            return _solve_columns(self.basis_xstar, v)
        except ValueError as e:
            raise CoordinateMismatch(f"{list(v)} does not lie in the root subspace of {self.name}.") from e

    def in_root_subspace(self, v: Sequence) -> bool:
        try:
            self.lattice_coordinates(v)
        except CoordinateMismatch:
            return False
        return True

    def to_lattice(self, v: Sequence) -> IntVector:
        coords = self.lattice_coordinates(v)
        if any(c.denominator != 1 for c in coords):
            raise CoordinateMismatch(f"{list(v)} is not in the lattice L* of {self.name}.")
        return tuple(int(c) for c in coords)

    def from_lattice(self, coords: Sequence) -> RationalVector:
        return tuple(
            sum((Fraction(c) * b[i] for c, b in zip(coords, self.basis_xstar)), Fraction(0))
            for i in range(self.rank_t)
        )

    @cached_property
    def _basis_array(self) -> np.ndarray:
        return np.array(self.basis_xstar, dtype=float).reshape(self.m, self.rank_t)

    def tau_to_lattice(self, tau_t: Sequence[float]) -> np.ndarray:
        """Restricts tau in t to the dual coordinates of basis_xstar."""
        return self._basis_array @ np.asarray(tau_t, dtype=float)

    def tau_from_lattice(self, tau_lattice: Sequence[float]) -> np.ndarray:
        """The element of X (inner-product image of X*) with the given lattice coordinates."""
        g = np.array([[float(c) for c in row] for row in self.gram])
        b = self._basis_array
        coeffs = np.linalg.solve(b @ g @ b.T, np.asarray(tau_lattice, dtype=float))
        return g @ b.T @ coeffs

    def weyl_denominator(self, tau_t: Sequence[float]) -> float:
        """prod over positive roots of 2 sinh(<alpha, tau>/2)."""
        t = np.asarray(tau_t, dtype=float)
        return float(np.prod([2.0 * math.sinh(float(np.dot(a, t)) / 2.0) for a in self.positive_roots]))

    def dim_weyl(self, mu: Sequence) -> int:
        mu = self.require_dominant(mu)
        shifted = tuple(Fraction(a) + r for a, r in zip(mu, self.rho))
        value = Fraction(1)
        for alpha in self.positive_roots:
            value *= self.inner(shifted, alpha) / self.inner(self.rho, alpha)
        return int(value)

    def pi_group_order_g(self) -> int:
        """Index of the root lattice in L*."""
        rows = [self.to_lattice(a) for a in self.simple_roots]
        return abs(int(sympy.Matrix([list(r) for r in rows]).det()))

    @property
    def weyl_order(self) -> int:
        return len(self.weyl_elements)

    @property
    def dim_group(self) -> int:
        return self.rank_t + 2 * len(self.positive_roots)
