from collections import defaultdict
from fractions import Fraction
import math
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from rich.console import Console

from tensorpath.asymptotics.convergence import ConvergenceStats, fit_remainder
from tensorpath.asymptotics.estimators import (
    estimate_central_limit,
    estimate_irreducible_cl,
    estimate_irreducible_sd,
    estimate_moderate_deviation,
    estimate_strong_deviation,
    estimate_strong_deviation_auto,
)
from tensorpath.asymptotics.models import AsymptoticEstimate
from tensorpath.asymptotics.regimes import classify_regime
from tensorpath.config.models import IRREDUCIBLE_ESTIMATORS, SweepSpec
from tensorpath.dual.solver import rate_function
from tensorpath.exact.biglog import log_exact
from tensorpath.exact.counter import count_paths
from tensorpath.exact.multiplicities import irreducible_multiplicity
from tensorpath.lattice.step_set import support_test
from tensorpath.runners.base import BaseRunner
from tensorpath.sdk.exceptions import CELL_ERRORS, NotAWeight
from tensorpath.utils.common import IntVector

from .report import Report
from .sources import ResolvedSource, resolve_source

console = Console(stderr=True)

ASYMPTOTIC_ESTIMATORS = ("CL", "MD", "SD", "irredSD", "irredCL")
REMAINDER_ORDERS = {
    "SD": "1/N",
    "irredSD": "1/N",
    "CL": "1/sqrt(N)",
    "irredCL": "1/sqrt(N)",
}


class Cell(NamedTuple):
    N: int
    target: IntVector


class CellResult(NamedTuple):
    row: Dict[str, object]
    failures: List[Tuple[str, str]]
    s_exponent: Optional[float]


class SeriesSummary(NamedTuple):
    estimator: str
    target: str
    stats: ConvergenceStats


class CompareResult(NamedTuple):
    report: Report
    summaries: List[SeriesSummary]
    failures: Dict[str, Dict[str, int]]


def compare_columns(resolved: ResolvedSource, estimators: List[str]) -> List[str]:
    columns = ["N", *resolved.coordinate_names, "regime", "support"]
    with_exact = "exact" in estimators
    if with_exact:
        columns.append("log_exact")
        if resolved.is_group and any(e in IRREDUCIBLE_ESTIMATORS for e in estimators):
            columns.append("log_exact_irred")
    for est in estimators:
        if est in ASYMPTOTIC_ESTIMATORS:
            columns.append(f"log_{est}")
            if with_exact:
                columns.append(f"ratio_{est}")
    if "rate" in estimators:
        columns.append("rate")
    return columns


def _log_or_none(value) -> Optional[float]:
    return log_exact(value) if value > 0 else None


class CompareManager:
    """Runs exact-vs-asymptotic comparison sweeps over (N, target) cells."""

    def __init__(self, runner: BaseRunner):
        self.runner = runner

    def run(self, spec: SweepSpec) -> CompareResult:
        resolved = resolve_source(spec.source)
        columns = compare_columns(resolved, spec.estimators)
        ray = resolved.ray_in_lattice(spec.targets) if spec.targets.kind == "ray" else None

        if "exact" in spec.estimators:
            with console.status("[cyan]Computing exact coefficient tables...[/cyan]"):
                for N in spec.n_list:
                    count_paths(resolved.step_set, N, spec.mem_cap)

        cells = [Cell(N, t) for N in spec.n_list for t in resolved.expand_targets(spec.targets, N)]
        console.print(f"Evaluating {len(cells)} cells for N in {spec.n_list} with estimators {spec.estimators}")
        evaluate = self._cell_evaluator(spec, resolved, columns, ray)
        results = self.runner.map(evaluate, cells, description="Comparing")

        failures: Dict[str, Dict[str, int]] = defaultdict(lambda: defaultdict(int))
        for result in results:
            for est, reason in result.failures:
                failures[est][reason] += 1

        report = Report(
            command="compare",
            spec=spec.model_dump(mode="json", by_alias=True),
            constants=resolved.constants(),
            columns=columns,
            rows=[r.row for r in results],
        )
        return CompareResult(
            report=report,
            summaries=self._summarize(spec, cells, results),
            failures={est: dict(reasons) for est, reasons in failures.items()},
        )

    def _cell_evaluator(
        self,
        spec: SweepSpec,
        resolved: ResolvedSource,
        columns: List[str],
        ray: Optional[Tuple[IntVector, IntVector]],
    ) -> Callable[[Cell], CellResult]:
        s = resolved.step_set
        d = resolved.diagram
        thresholds = spec.thresholds
        with_exact = "exact" in spec.estimators

        def estimate(est: str, N: int, target: IntVector, gamma: IntVector) -> AsymptoticEstimate:
            if est == "CL":
                return estimate_central_limit(s, gamma, N)
            if est == "MD":
                return estimate_moderate_deviation(s, gamma, N, tol=spec.tol)
            if est == "SD":
                if ray is not None:
                    return estimate_strong_deviation(s, ray[0], ray[1], N, tol=spec.tol)
                return estimate_strong_deviation_auto(s, gamma, N, tol=spec.tol)
            if est == "irredSD":
                if any(c % N for c in target):
                    raise NotAWeight(f"{list(target)} is not N times a weight at N={N}.")
                return estimate_irreducible_sd(d, tuple(c // N for c in target), N, tol=spec.tol)
            return estimate_irreducible_cl(d, target, N)

        def evaluate(cell: Cell) -> CellResult:
            N, target = cell
            row: Dict[str, object] = {c: None for c in columns}
            row["N"] = N
            for name, value in zip(resolved.coordinate_names, target):
                row[name] = value
            failures: List[Tuple[str, str]] = []

            gamma = resolved.to_gamma(N, target)
            support = gamma is not None and support_test(s, N, gamma)
            row["support"] = support
            if not support:
                return CellResult(row, failures, None)

            decision = classify_regime(
                s, gamma, N,
                cl_cut=thresholds.cl_cut, md_cut=thresholds.md_cut, md_smax=thresholds.md_smax,
            )
            row["regime"] = decision.regime

            reference = {}
            if with_exact:
                reference["plain"] = _log_or_none(count_paths(s, N, spec.mem_cap).value(gamma))
                row["log_exact"] = reference["plain"]
                if "log_exact_irred" in row:
                    irred = None
                    if d.root_system.is_dominant(target):
                        irred = _log_or_none(irreducible_multiplicity(d, N, target, spec.mem_cap))
                    reference["irred"] = irred
                    row["log_exact_irred"] = irred

            for est in spec.estimators:
                if est not in ASYMPTOTIC_ESTIMATORS:
                    continue
                try:
                    result = estimate(est, N, target, gamma)
                except CELL_ERRORS as e:
                    failures.append((est, type(e).__name__))
                    continue
                if result.degenerate:
                    failures.append((est, "DegenerateLeadingTerm"))
                    continue
                row[f"log_{est}"] = result.log_value
                ref = reference.get("irred" if est in IRREDUCIBLE_ESTIMATORS else "plain")
                if ref is not None:
                    try:
                        row[f"ratio_{est}"] = math.exp(result.log_value - ref)
                    except OverflowError:
                        failures.append((est, "RatioOverflow"))

            if "rate" in spec.estimators:
                try:
                    row["rate"] = rate_function(s, [Fraction(g, N) for g in gamma], tol=spec.tol)
                except CELL_ERRORS as e:
                    failures.append(("rate", type(e).__name__))

            return CellResult(row, failures, decision.s_exponent)

        return evaluate

    def _summarize(self, spec: SweepSpec, cells: List[Cell], results: List[CellResult]) -> List[SeriesSummary]:
        """Ratio trend along N per estimator and target series."""
        if "exact" not in spec.estimators:
            return []
        summaries = []
        for est in spec.estimators:
            if est not in ASYMPTOTIC_ESTIMATORS:
                continue
            series: Dict[str, List[Tuple[int, float, Optional[float]]]] = defaultdict(list)
            for cell, result in zip(cells, results):
                ratio = result.row.get(f"ratio_{est}")
                if ratio is None:
                    continue
                key = "ray" if spec.targets.kind == "ray" else ",".join(str(c) for c in cell.target)
                series[key].append((cell.N, ratio, result.s_exponent))
            for key in sorted(series):
                points = series[key]
                if len(points) < 2:
                    continue
                order = REMAINDER_ORDERS.get(est)
                if order is None:
                    s_max = max((p[2] for p in points if p[2] is not None), default=0.5)
                    order = min(max(1.0 - s_max, 0.05), 1.0)
                stats = fit_remainder([p[0] for p in points], [p[1] for p in points], order)
                summaries.append(SeriesSummary(est, key, stats))
        return summaries
