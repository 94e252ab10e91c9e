from .client import TensorPathClient
from .exceptions import TensorPathError

__all__ = [
    "TensorPathClient",
    "TensorPathError",
]
