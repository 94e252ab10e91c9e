from .base import RootSystem, WeylElement
from .a1 import A1System
from .a2 import A2System
from .u2 import U2System
from .registry import GROUP_MAP, build_root_system
from .freudenthal import WeightDiagram, dominant_weights, freudenthal_diagram
from .u2_fixture import U2GoldenData, u2_fixture

__all__ = [
    "RootSystem",
    "WeylElement",
    "A1System",
    "A2System",
    "U2System",
    "GROUP_MAP",
    "build_root_system",
    "WeightDiagram",
    "dominant_weights",
    "freudenthal_diagram",
    "U2GoldenData",
    "u2_fixture",
]
