from fractions import Fraction
import itertools
from typing import Dict, List, Optional, Tuple

from rich.console import Console

from tensorpath.config.models import RateProfileSpec
from tensorpath.dual.solver import invert_moment_map
from tensorpath.exact.biglog import log_exact
from tensorpath.exact.counter import count_paths
from tensorpath.lattice.polytope import classify_point
from tensorpath.lattice.step_set import WeightedStepSet
from tensorpath.runners.base import BaseRunner
from tensorpath.utils.common import RationalVector

from .report import Report
from .sources import nearest_admissible, resolve_source

console = Console(stderr=True)


def interior_grid(s: WeightedStepSet, grid_points: int) -> List[RationalVector]:
    """grid_points equally spaced values per axis strictly inside the bounding box,
    restricted to the interior of conv(S)."""
    if grid_points < 2:
        raise ValueError(f"grid_points must be >= 2, got {grid_points}")
    axes = [
        [Fraction(lo) + Fraction(hi - lo) * k / (grid_points + 1) for k in range(1, grid_points + 1)]
        for lo, hi in zip(s.lower_corner, s.upper_corner)
    ]
    return [x for x in itertools.product(*axes) if classify_point(s, x).is_interior]


def empirical_rate(s: WeightedStepSet, N: int, x: RationalVector, mem_cap: int) -> Tuple[Optional[float], Optional[Tuple[int, ...]]]:
    """-(1/N) log(P_N(gamma) / V(S)^N) at the admissible gamma nearest to N*x."""
    gamma = nearest_admissible(s, N, x)
    if gamma is None:
        return None, None
    value = count_paths(s, N, mem_cap).value(gamma)
    if value <= 0:
        return None, gamma
    return s.log_total_weight - log_exact(value) / N, gamma


class RateProfileManager:
    """Tabulates I_S, delta and det A over an interior grid of the step polytope."""

    def __init__(self, runner: BaseRunner):
        self.runner = runner

    def run(self, spec: RateProfileSpec) -> Report:
        resolved = resolve_source(spec.source)
        s = resolved.step_set
        points = interior_grid(s, spec.grid_points)
        console.print(f"Profiling the rate function at {len(points)} interior grid points")

        coordinate_names = [f"x{i + 1}" for i in range(s.dim)]
        columns = [*coordinate_names, "rate", "delta", "det_A"]
        if spec.empirical_n is not None:
            columns += [f"emp_g{i + 1}" for i in range(s.dim)] + ["empirical_rate"]
            count_paths(s, spec.empirical_n, spec.mem_cap)

        def evaluate(x: RationalVector) -> Dict[str, object]:
            dual = invert_moment_map(s, x, tol=spec.tol)
            row: Dict[str, object] = dict(zip(coordinate_names, (float(c) for c in x)))
            row.update(rate=dual.rate, delta=dual.delta, det_A=dual.hessian_det)
            if spec.empirical_n is not None:
                value, gamma = empirical_rate(s, spec.empirical_n, x, spec.mem_cap)
                for i in range(s.dim):
                    row[f"emp_g{i + 1}"] = None if gamma is None else gamma[i]
                row["empirical_rate"] = value
            return row

        rows = self.runner.map(evaluate, points, description="Rate profile")
        constants = resolved.constants()
        if spec.empirical_n is not None:
            constants["empirical_N"] = str(spec.empirical_n)
        return Report(
            command="rate",
            spec=spec.model_dump(mode="json", by_alias=True),
            constants=constants,
            columns=columns,
            rows=rows,
        )
