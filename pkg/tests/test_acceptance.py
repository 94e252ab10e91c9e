"""End-to-end convergence checks of the estimators against the exact counts."""
from fractions import Fraction
import math

import pytest

from tensorpath.asymptotics import (
    estimate_central_limit,
    estimate_irreducible_cl,
    estimate_irreducible_sd,
    estimate_moderate_deviation,
    estimate_strong_deviation,
    estimate_weight_multiplicity,
    fit_remainder,
)
from tensorpath.config import SweepSpec
from tensorpath.core import CompareManager
from tensorpath.core.rate_profile import empirical_rate
from tensorpath.dual import rate_function
from tensorpath.exact import (
    DEFAULT_MEM_CAP,
    count_paths,
    irreducible_multiplicity,
    log_exact,
    weight_multiplicity,
)
from tensorpath.groups import build_root_system, freudenthal_diagram
from tensorpath.lattice import support_test
from tensorpath.runners import SerialRunner


def exact_over_estimate(exact, estimate) -> float:
    return math.exp(log_exact(exact) - estimate.log_value)


def test_binomial_strong_deviation_converges(binomial):
    ns = [8, 16, 32, 64, 128]
    ratios = [exact_over_estimate(math.comb(2 * N, N), estimate_strong_deviation(binomial, (1,), (0,), N)) for N in ns]
    errors = [abs(r - 1.0) for r in ratios]
    assert all(e <= 2.0 / N for e, N in zip(errors, ns))
    assert all(b <= a for a, b in zip(errors, errors[1:]))


@pytest.mark.parametrize("N", [64, 256, 1024])
def test_a1_central_limit_profile(a1_spin_half, N):
    reach = int(3 * math.sqrt(N))
    for k in range(-reach - reach % 2, reach + 1, 2):
        if abs(k) > 3 * math.sqrt(N):
            continue
        exact = weight_multiplicity(a1_spin_half, N, (k,))
        assert exact == math.comb(N, (N + k) // 2)
        est = estimate_weight_multiplicity(a1_spin_half, (k,), N, regime="CL")
        assert est.linear_term == pytest.approx(-k * k / (2.0 * N))
        # exact * sqrt(2 pi N) / (2 * 2^N)
        normalized = math.exp(log_exact(exact) - (est.log_value - est.linear_term))
        assert abs(normalized - math.exp(-k * k / (2.0 * N))) <= 1.5 / math.sqrt(N)


def test_parity_class_of_the_simple_walk(simple_walk):
    for N in range(1, 101):
        table = count_paths(simple_walk, N)
        for g in range(-N - 1, N + 2):
            admissible = (g + N) % 2 == 0
            assert support_test(simple_walk, N, (g,)) is admissible
            if not admissible:
                assert table.value((g,)) == 0

    N = 1024
    peak = estimate_central_limit(simple_walk, (0,), N)
    assert exact_over_estimate(math.comb(N, N // 2), peak) == pytest.approx(1.0, abs=0.1)


def test_u2_irreducible_strong_deviation_converges():
    d = freudenthal_diagram(build_root_system("U2"), (3, 0))
    ns = [10, 20, 40, 80]
    ratios = [
        exact_over_estimate(irreducible_multiplicity(d, N, (2 * N, N)), estimate_irreducible_sd(d, (2, 1), N))
        for N in ns
    ]
    stats = fit_remainder(ns, ratios, order="1/N")
    assert stats.bound_holds


def test_u2_even_gap_is_flagged_degenerate():
    spec = SweepSpec(
        source={"kind": "group", "group": "U2", "lambda": [2, 0]},
        N=[4, 8],
        targets={"kind": "ray", "alpha": [1, 1]},
        estimators=["exact", "irredSD"],
    )
    result = CompareManager(SerialRunner()).run(spec)
    assert result.failures == {"irredSD": {"DegenerateLeadingTerm": 2}}
    assert all(row["log_irredSD"] is None for row in result.report.rows)
    assert all(row["log_exact_irred"] is not None for row in result.report.rows)


@pytest.mark.parametrize("mu_of_n", [lambda N: 0, lambda N: 2 * int(math.isqrt(N) // 2)], ids=["zero", "sqrt"])
def test_a1_irreducible_central_limit_converges(a1_spin_half, mu_of_n):
    ns = [64, 256, 1024]
    ratios = []
    for N in ns:
        mu = (mu_of_n(N),)
        ratios.append(exact_over_estimate(
            irreducible_multiplicity(a1_spin_half, N, mu),
            estimate_irreducible_cl(a1_spin_half, mu, N),
        ))
    stats = fit_remainder(ns, ratios, order="1/sqrt(N)")
    assert stats.bound_holds
    assert stats.monotone


@pytest.mark.parametrize("N", [100, 400, 1600])
def test_empirical_rate_matches_legendre_rate(simple_walk, N):
    x = [Fraction(1, 2)]
    empirical, gamma = empirical_rate(simple_walk, N, x, DEFAULT_MEM_CAP)
    assert (gamma[0] + N) % 2 == 0
    assert abs(empirical - rate_function(simple_walk, x)) <= math.log(2 * math.pi * N) / (2 * N) + 3.0 / N


def test_binomial_moderate_deviation_converges(binomial):
    ns = [64, 256, 1024]
    ratios = []
    for N in ns:
        gamma = N + math.floor(N**0.6 + 1e-9)
        ratios.append(exact_over_estimate(math.comb(2 * N, gamma), estimate_moderate_deviation(binomial, (gamma,), N)))
    stats = fit_remainder(ns, ratios, order=0.4)
    assert stats.bound_holds
    assert stats.monotone
