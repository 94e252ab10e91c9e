from ._version import __version__
from .sdk import TensorPathClient
from .config import SweepSpec, RateProfileSpec

__all__ = [
    "__version__",
    "TensorPathClient",
    "SweepSpec",
    "RateProfileSpec",
]
