from functools import lru_cache
from typing import Dict, Type

from tensorpath.sdk.exceptions import UnknownName
from .base import RootSystem
from .a1 import A1System
from .a2 import A2System
from .u2 import U2System

GROUP_MAP: Dict[str, Type[RootSystem]] = {
    "A1": A1System,
    "A2": A2System,
    "U2": U2System,
}


@lru_cache(maxsize=None)
def build_root_system(name: str) -> RootSystem:
    """Returns the root-system data for a group name ("A1", "A2" or "U2")."""
    system_class = GROUP_MAP.get(name.strip().upper() if isinstance(name, str) else name)
    if not system_class:
        raise UnknownName(f"Unsupported group: {name}. Available: {list(GROUP_MAP.keys())}")
    return system_class()
