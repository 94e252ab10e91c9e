from .step_set import (
    WeightedStepSet,
    build_step_set,
    difference_lattice,
    in_difference_lattice,
    lattice_coordinates,
    pi_group_order,
    support_test,
)
from .polytope import PolytopePoint, classify_point

__all__ = [
    "WeightedStepSet",
    "build_step_set",
    "difference_lattice",
    "in_difference_lattice",
    "lattice_coordinates",
    "pi_group_order",
    "support_test",
    "PolytopePoint",
    "classify_point",
]
