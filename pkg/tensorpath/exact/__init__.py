from .biglog import log_exact
from .counter import (
    DEFAULT_MEM_CAP,
    CoefficientTable,
    count_paths,
    count_paths_naive,
    required_cells,
)
from .multiplicities import (
    IrreducibleMeasure,
    alternating_mass,
    decompose_tensor_power,
    irreducible_measure,
    irreducible_multiplicity,
    weight_multiplicity,
)

__all__ = [
    "log_exact",
    "DEFAULT_MEM_CAP",
    "CoefficientTable",
    "count_paths",
    "count_paths_naive",
    "required_cells",
    "IrreducibleMeasure",
    "alternating_mass",
    "decompose_tensor_power",
    "irreducible_measure",
    "irreducible_multiplicity",
    "weight_multiplicity",
]
