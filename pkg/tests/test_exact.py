from fractions import Fraction
import math

import numpy as np
import pytest

from conftest import random_step_set
from tensorpath.exact import (
    alternating_mass,
    count_paths,
    count_paths_naive,
    decompose_tensor_power,
    irreducible_measure,
    irreducible_multiplicity,
    log_exact,
    required_cells,
    weight_multiplicity,
)
from tensorpath.groups import build_root_system, freudenthal_diagram
from tensorpath.lattice import build_step_set
from tensorpath.sdk.exceptions import CoordinateMismatch, MemoryCapExceeded, NotDominant


def test_binomial_coefficients(binomial):
    table = count_paths(binomial, 2)
    assert [table.value((g,)) for g in range(5)] == [1, 4, 6, 4, 1]
    assert table.value((5,)) == 0
    assert table.value((-1,)) == 0


def test_single_step_table_is_the_weights():
    s = build_step_set(2, [[0, 0], [1, 0], [0, 1], [-1, -1]], [1, "1/2", 3, 2])
    table = count_paths(s, 1)
    for step, w in zip(s.steps, s.weights):
        assert table.value(step) == w
    assert dict(table.items()) == dict(zip(s.steps, s.weights))


def test_central_trinomial():
    s = build_step_set(1, [[-2], [0], [2]], [1, 1, 1])
    assert count_paths(s, 3).value((0,)) == 7
    assert count_paths(s, 3).value((1,)) == 0


def test_central_binomial_large_n(binomial):
    table = count_paths(binomial, 200)
    assert table.value((200,)) == math.comb(400, 200)
    assert table.log_value((200,)) == pytest.approx(math.lgamma(401) - 2 * math.lgamma(201), rel=1e-12)


def test_fractional_weights_stay_exact():
    s = build_step_set(1, [[0], [1]], ["1/3", "2/3"])
    table = count_paths(s, 4)
    assert table.value((2,)) == Fraction(6 * 4, 81)
    assert table.total() == 1


def test_binary_powering_matches_naive_oracle():
    rng = np.random.default_rng(11)
    for _ in range(10):
        s = random_step_set(rng)
        N = int(rng.integers(1, 8))
        fast = dict(count_paths(s, N).items())
        slow = dict(count_paths_naive(s, N).items())
        assert fast == slow


def test_mass_identity():
    rng = np.random.default_rng(3)
    for _ in range(20):
        s = random_step_set(rng)
        N = int(rng.integers(1, 13))
        assert count_paths(s, N).total() == s.total_weight**N


def test_moments_are_exact(binomial):
    N = 9
    table = count_paths(binomial, N)
    assert table.mean() == (Fraction(N),)
    assert table.covariance() == ((Fraction(N, 2),),)


def test_memory_cap(binomial):
    assert required_cells(binomial, 10) == 21
    with pytest.raises(MemoryCapExceeded) as exc:
        count_paths(binomial, 10, mem_cap=20)
    assert exc.value.required_cells == 21
    assert exc.value.cap == 20


@pytest.mark.parametrize(
    "value, expected",
    [
        (1, 0.0),
        (2**5000, 5000 * math.log(2.0)),
        (3**4000 + 1, 4000 * math.log(3.0)),
        (Fraction(1, 3), -math.log(3.0)),
    ],
)
def test_log_exact(value, expected):
    assert log_exact(value) == pytest.approx(expected, rel=1e-14)


def test_log_exact_zero_and_negative():
    assert log_exact(0) == -math.inf
    with pytest.raises(ValueError):
        log_exact(-1)


def test_weight_multiplicity_examples(a1_spin_half):
    assert weight_multiplicity(a1_spin_half, 4, (0,)) == 6
    assert weight_multiplicity(a1_spin_half, 4, (4,)) == 1
    assert weight_multiplicity(a1_spin_half, 4, (1,)) == 0
    adjoint = freudenthal_diagram(build_root_system("A1"), (2,))
    assert weight_multiplicity(adjoint, 2, (0,)) == 3


def test_weight_multiplicity_off_root_subspace(u2_n3):
    # (3,0)+(1,2), (2,1)+(2,1), (1,2)+(3,0)
    assert weight_multiplicity(u2_n3, 2, (4, 2)) == 3
    assert weight_multiplicity(u2_n3, 2, (4, 1)) == 0
    with pytest.raises(CoordinateMismatch):
        weight_multiplicity(u2_n3, 2, (4,))


@pytest.mark.parametrize(
    "group, lam, N, targets",
    [
        ("A1", (2,), 5, [(k,) for k in range(-11, 12)]),
        ("A2", (1, 1), 3, [(a, b) for a in range(-6, 7) for b in range(-6, 7)]),
        ("A2", (2, 0), 3, [(a, b) for a in range(-6, 7) for b in range(-6, 7)]),
        ("U2", (3, 0), 3, [(a, 9 - a) for a in range(-1, 11)]),
    ],
)
def test_weight_multiplicity_is_weyl_invariant(group, lam, N, targets):
    r = build_root_system(group)
    d = freudenthal_diagram(r, lam)
    nonzero = 0
    for nu in targets:
        m = weight_multiplicity(d, N, nu)
        nonzero += m > 0
        for w in r.weyl_elements:
            image = tuple(int(c) for c in w.apply(nu))
            assert weight_multiplicity(d, N, image) == m
    assert nonzero > 1


def test_highest_weight_of_tensor_power_has_multiplicity_one():
    r = build_root_system("A2")
    d = freudenthal_diagram(r, (2, 1))
    assert weight_multiplicity(d, 3, (6, 3)) == 1
    assert irreducible_multiplicity(d, 3, (6, 3)) == 1


@pytest.mark.parametrize(
    "N, mu, expected",
    [
        (4, (0,), 2),
        (4, (2,), 3),
        (4, (4,), 1),
        (5, (0,), 0),
        (1, (1,), 1),
    ],
)
def test_irreducible_multiplicity_spin_half(a1_spin_half, N, mu, expected):
    assert irreducible_multiplicity(a1_spin_half, N, mu) == expected


def test_irreducible_multiplicity_requires_dominant(a1_spin_half):
    with pytest.raises(NotDominant):
        irreducible_multiplicity(a1_spin_half, 4, (-2,))


@pytest.mark.parametrize(
    "group, lam, max_n",
    [
        ("A1", (1,), 10),
        ("A1", (2,), 10),
        ("A2", (1, 1), 6),
        ("U2", (3, 0), 8),
    ],
)
def test_dimension_identity(group, lam, max_n):
    r = build_root_system(group)
    d = freudenthal_diagram(r, lam)
    for N in range(1, max_n + 1):
        decomposition = decompose_tensor_power(d, N)
        assert sum(a * r.dim_weyl(mu) for mu, a in decomposition.items()) == d.dimension**N


def test_irreducible_measure_matches_alternating_mass(a1_spin_half):
    N = 6
    measure = irreducible_measure(a1_spin_half, N)
    assert measure.summands == sum(decompose_tensor_power(a1_spin_half, N).values())
    assert sum(measure.masses.values()) == 1
    for mu, mass in measure.masses.items():
        assert alternating_mass(a1_spin_half, N, mu, measure.summands) == mass
