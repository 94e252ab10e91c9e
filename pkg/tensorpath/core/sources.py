from fractions import Fraction
import itertools
import math
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from tensorpath.config.loaders import load_step_set_from_json
from tensorpath.config.models import GridTargets, GroupSource, PointTargets, RayTargets, StepSetSource
from tensorpath.dual.solver import center_of_mass, eval_character
from tensorpath.groups.freudenthal import WeightDiagram, freudenthal_diagram
from tensorpath.groups.registry import build_root_system
from tensorpath.lattice.polytope import classify_point
from tensorpath.lattice.step_set import WeightedStepSet, support_test
from tensorpath.sdk.exceptions import CoordinateMismatch, DimensionMismatch
from tensorpath.utils.common import IntVector, fraction_to_str, vec_add, vec_scale, vec_sub


class ResolvedSource:
    """A step set together with the coordinates targets are written in.

    Step-set sources use lattice coordinates gamma directly. Group sources
    write targets as weights nu in t*-coordinates; gamma is the lattice
    coordinate vector of nu - N*lambda in the shifted step set S_lambda.
    """

    def __init__(self, step_set: WeightedStepSet, diagram: Optional[WeightDiagram] = None):
        self.step_set = step_set
        self.diagram = diagram

    @property
    def is_group(self) -> bool:
        return self.diagram is not None

    @property
    def root_system(self):
        return self.diagram.root_system if self.diagram is not None else None

    @property
    def target_dim(self) -> int:
        return self.root_system.rank_t if self.is_group else self.step_set.dim

    @property
    def coordinate_names(self) -> List[str]:
        prefix = "nu" if self.is_group else "g"
        return [f"{prefix}{i + 1}" for i in range(self.target_dim)]

    def check_target(self, target: Sequence[int]) -> IntVector:
        if len(target) != self.target_dim:
            error = CoordinateMismatch if self.is_group else DimensionMismatch
            raise error(f"Target {list(target)} has length {len(target)}, expected {self.target_dim}.")
        return tuple(int(c) for c in target)

    def to_gamma(self, N: int, target: Sequence[int]) -> Optional[IntVector]:
        """Lattice coordinates of the target, or None when it is off the lattice."""
        target = self.check_target(target)
        if not self.is_group:
            return target
        r = self.root_system
        shift = vec_sub(target, vec_scale(N, self.diagram.highest_weight))
        if not r.in_root_subspace(shift):
            return None
        coords = r.lattice_coordinates(shift)
        if any(c.denominator != 1 for c in coords):
            return None
        return tuple(int(c) for c in coords)

    def from_gamma(self, N: int, gamma: Sequence[int]) -> IntVector:
        if not self.is_group:
            return tuple(int(c) for c in gamma)
        weight = vec_add(vec_scale(N, self.diagram.highest_weight), self.root_system.from_lattice(gamma))
        return tuple(int(c) for c in weight)

    def ray_in_lattice(self, targets: RayTargets):
        """(alpha, f) of a ray target in lattice coordinates of the step set."""
        alpha = self.check_target(targets.alpha)
        f = self.check_target(targets.f)
        if not self.is_group:
            return alpha, f
        r = self.root_system
        return r.to_lattice(vec_sub(alpha, self.diagram.highest_weight)), r.to_lattice(f)

    def expand_targets(self, targets: Union[PointTargets, RayTargets, GridTargets], N: int) -> List[IntVector]:
        """Targets for one N in lexicographic order, in target coordinates."""
        if targets.kind == "points":
            return sorted({self.check_target(p) for p in targets.points})
        if targets.kind == "ray":
            alpha = self.check_target(targets.alpha)
            f = self.check_target(targets.f)
            return [tuple(N * a + b for a, b in zip(alpha, f))]
        return sorted(self.from_gamma(N, g) for g in grid_points(self.step_set, N, targets.radius))

    def constants(self) -> Dict[str, str]:
        s = self.step_set
        hessian = eval_character(s, np.zeros(s.dim)).hessian
        out = {
            "dim": str(s.dim),
            "pi_order": str(s.pi_order),
            "total_weight": fraction_to_str(s.total_weight),
            "center_of_mass": " ".join(fraction_to_str(c) for c in center_of_mass(s)),
            "det_A_center": repr(float(np.linalg.det(hessian))),
        }
        if self.is_group:
            d = self.diagram
            r = self.root_system
            out.update({
                "group": r.name,
                "lambda": " ".join(str(c) for c in d.highest_weight),
                "dim_V_lambda": str(d.dimension),
                "Q_star": " ".join(fraction_to_str(c) for c in d.q_star),
                "pi_group_order": str(r.pi_group_order_g()),
                "coordinates": r.coordinates_help,
            })
        return out


def grid_points(s: WeightedStepSet, N: int, radius: float) -> List[IntVector]:
    """Support-admissible lattice points of N*conv(S) within radius*sqrt(N) of N*m*."""
    center = [N * c for c in center_of_mass(s)]
    reach = radius * math.sqrt(N)
    axes = [
        range(max(math.ceil(c - reach), N * lo), min(math.floor(c + reach), N * hi) + 1)
        for c, lo, hi in zip(center, s.lower_corner, s.upper_corner)
    ]
    points = []
    for gamma in itertools.product(*axes):
        if sum(float(g - c) ** 2 for g, c in zip(gamma, center)) > reach * reach:
            continue
        if not support_test(s, N, gamma):
            continue
        if classify_point(s, [Fraction(g, N) for g in gamma]).location == "outside":
            continue
        points.append(tuple(gamma))
    return points


def nearest_admissible(s: WeightedStepSet, N: int, x: Sequence, max_shell: int = 4) -> Optional[IntVector]:
    """The support-admissible lattice point closest to N*x (ties broken lexicographically)."""
    scaled = [Fraction(c) * N for c in x]
    base = [round(c) for c in scaled]
    for shell in range(max_shell + 1):
        candidates = []
        for offset in itertools.product(range(-shell, shell + 1), repeat=s.dim):
            gamma = tuple(b + o for b, o in zip(base, offset))
            if support_test(s, N, gamma):
                distance = sum((g - c) ** 2 for g, c in zip(gamma, scaled))
                candidates.append((distance, gamma))
        if candidates:
            return min(candidates)[1]
    return None


def resolve_source(source: Union[StepSetSource, GroupSource]) -> ResolvedSource:
    if source.kind == "group":
        r = build_root_system(source.group)
        diagram = freudenthal_diagram(r, source.highest_weight)
        return ResolvedSource(diagram.step_set, diagram)
    if source.path is not None:
        return ResolvedSource(load_step_set_from_json(source.path))
    return ResolvedSource(source.inline.to_step_set())
