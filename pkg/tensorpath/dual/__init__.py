from .solver import (
    CharacterEvaluation,
    DualPoint,
    center_of_mass,
    eval_character,
    invert_moment_map,
    objective,
    rate_function,
)
from .legendre import rate_by_supremum

__all__ = [
    "CharacterEvaluation",
    "DualPoint",
    "center_of_mass",
    "eval_character",
    "invert_moment_map",
    "objective",
    "rate_function",
    "rate_by_supremum",
]
