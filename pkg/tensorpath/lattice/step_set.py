from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
import math
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from scipy.special import logsumexp
from sympy.matrices.normalforms import hermite_normal_form

from tensorpath.sdk.exceptions import (
    DimensionMismatch,
    DuplicateStep,
    NonFiniteInput,
    NonPositiveWeight,
    SpanDeficient,
)
from tensorpath.utils.common import IntVector, fraction_to_str, parse_rational

BasisMatrix = Tuple[IntVector, ...]


@dataclass(frozen=True)
class WeightedStepSet:
    """A finite set of integer steps with positive exact weights.

    Steps are stored in coordinates of a fixed primitive basis of the ambient
    lattice, sorted lexicographically. ``basis_diff`` is the column Hermite
    normal form of the difference lattice (rows of the matrix; columns are the
    basis vectors) and ``pi_order`` its index in the ambient lattice.
    Instances are immutable and compare/hash by (dim, steps, weights).
    """

    dim: int
    steps: Tuple[IntVector, ...]
    weights: Tuple[Fraction, ...]
    basis_diff: BasisMatrix = field(compare=False, repr=False)
    pi_order: int = field(compare=False)

    @cached_property
    def total_weight(self) -> Fraction:
        """V(S), the sum of all weights."""
        return sum(self.weights, Fraction(0))

    @cached_property
    def is_integral(self) -> bool:
        return all(w.denominator == 1 for w in self.weights)

    @cached_property
    def steps_array(self) -> np.ndarray:
        arr = np.array(self.steps, dtype=float).reshape(len(self.steps), self.dim)
        arr.setflags(write=False)
        return arr

    @cached_property
    def log_weights(self) -> np.ndarray:
        arr = np.array(
            [math.log(w.numerator) - math.log(w.denominator) for w in self.weights],
            dtype=float,
        )
        arr.setflags(write=False)
        return arr

    @cached_property
    def log_total_weight(self) -> float:
        return float(logsumexp(self.log_weights))

    @cached_property
    def _weight_map(self) -> Dict[IntVector, Fraction]:
        return dict(zip(self.steps, self.weights))

    def weight_of(self, beta: Sequence[int]) -> Fraction:
        return self._weight_map.get(tuple(int(b) for b in beta), Fraction(0))

    def contains(self, beta: Sequence) -> bool:
        coords = [Fraction(b) for b in beta]
        if len(coords) != self.dim or any(c.denominator != 1 for c in coords):
            return False
        return tuple(int(c) for c in coords) in self._weight_map

    @cached_property
    def lower_corner(self) -> IntVector:
        return tuple(min(step[i] for step in self.steps) for i in range(self.dim))

    @cached_property
    def upper_corner(self) -> IntVector:
        return tuple(max(step[i] for step in self.steps) for i in range(self.dim))

    def to_dict(self) -> dict:
        """Step-set JSON document (weights as "p/q" strings)."""
        return {
            "dim": self.dim,
            "steps": [
                {"coords": list(step), "weight": fraction_to_str(w)}
                for step, w in zip(self.steps, self.weights)
            ],
        }


def _check_vector(vector: Sequence, dim: int, what: str) -> IntVector:
    if len(vector) != dim:
        raise DimensionMismatch(f"{what} {list(vector)} has length {len(vector)}, expected {dim}.")
    out = []
    for c in vector:
        if isinstance(c, float) and not math.isfinite(c):
            raise NonFiniteInput(f"{what} {list(vector)} has a non-finite coordinate.")
        f = Fraction(c)
        if f.denominator != 1:
            raise DimensionMismatch(f"{what} {list(vector)} is not an integer vector.")
        out.append(int(f))
    return tuple(out)


def build_step_set(
    dim: int,
    steps: Sequence[Sequence[int]],
    weights: Sequence[Union[int, str, Fraction]],
) -> WeightedStepSet:
    """Validates (S, c) and computes the difference lattice and |Pi(S)|."""
    if dim < 1:
        raise DimensionMismatch(f"Lattice rank must be at least 1, got {dim}.")
    if len(steps) != len(weights):
        raise DimensionMismatch(f"Got {len(steps)} steps but {len(weights)} weights.")

    parsed: Dict[IntVector, Fraction] = {}
    for raw_step, raw_weight in zip(steps, weights):
        step = _check_vector(raw_step, dim, "Step")
        if step in parsed:
            raise DuplicateStep(f"Step {list(step)} appears more than once.")
        try:
            weight = parse_rational(raw_weight)
        except (ValueError, ZeroDivisionError) as e:
            raise NonFiniteInput(f"Invalid weight {raw_weight!r} for step {list(step)}: {e}") from e
        if weight <= 0:
            raise NonPositiveWeight(f"Weight of step {list(step)} must be positive, got {weight}.")
        parsed[step] = weight

    if len(parsed) < 2:
        raise SpanDeficient("A step set needs at least two distinct steps.")

    ordered = sorted(parsed)
    basis = _difference_basis(dim, ordered)
    pi_order = abs(int(sympy.Matrix([list(row) for row in basis]).det()))

    return WeightedStepSet(
        dim=dim,
        steps=tuple(ordered),
        weights=tuple(parsed[s] for s in ordered),
        basis_diff=basis,
        pi_order=pi_order,
    )


def _difference_basis(dim: int, steps: List[IntVector]) -> BasisMatrix:
    base = steps[0]
    columns = [[s[i] - base[i] for s in steps[1:]] for i in range(dim)]
    diffs = sympy.Matrix(columns)
    if diffs.rank() < dim:
        raise SpanDeficient(
            f"Step differences span a space of rank {diffs.rank()}, expected {dim}."
        )
    hnf = hermite_normal_form(diffs)
    keep = [j for j in range(hnf.shape[1]) if any(hnf[i, j] != 0 for i in range(dim))]
    hnf = hnf[:, keep]
    if hnf.shape != (dim, dim):
        raise SpanDeficient(f"Hermite normal form has shape {hnf.shape}, expected ({dim}, {dim}).")
    return tuple(tuple(int(hnf[i, j]) for j in range(dim)) for i in range(dim))


def difference_lattice(s: WeightedStepSet) -> BasisMatrix:
    """Hermite-reduced basis of span_Z{beta - beta'}; columns are basis vectors."""
    return s.basis_diff


def pi_group_order(s: WeightedStepSet) -> int:
    return s.pi_order


def lattice_coordinates(basis: BasisMatrix, v: Sequence) -> Optional[IntVector]:
    """Integer coordinates of ``v`` in the lattice spanned by the columns of ``basis``.

    Returns None when ``v`` is not a lattice vector.
    """
    matrix = sympy.Matrix([list(row) for row in basis])
    if len(v) != matrix.shape[0]:
        raise DimensionMismatch(f"Vector {list(v)} has length {len(v)}, expected {matrix.shape[0]}.")
    rhs = sympy.Matrix([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in v])
    coords = matrix.LUsolve(rhs)
    if any(not c.is_integer for c in coords):
        return None
    return tuple(int(c) for c in coords)


def in_difference_lattice(s: WeightedStepSet, v: Sequence) -> bool:
    return lattice_coordinates(s.basis_diff, v) is not None


def support_test(s: WeightedStepSet, N: int, gamma: Sequence) -> bool:
    """Congruence test gamma - N*beta0 in L(S)*, necessary for a nonzero count."""
    if len(gamma) != s.dim:
        raise DimensionMismatch(f"Target {list(gamma)} has length {len(gamma)}, expected {s.dim}.")
    if any(Fraction(g).denominator != 1 for g in gamma):
        return False
    beta0 = s.steps[0]
    shifted = tuple(Fraction(g) - N * b for g, b in zip(gamma, beta0))
    return in_difference_lattice(s, shifted)
