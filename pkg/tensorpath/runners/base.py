from abc import ABC, abstractmethod
from typing import Callable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


class BaseRunner(ABC):
    """Abstract Base Class for sweep execution backends."""

    @abstractmethod
    def map(self, func: Callable[[T], R], items: Sequence[T], description: str = "Evaluating") -> List[R]:
        """Apply func to every item; results come back in input order."""
        pass


class SerialRunner(BaseRunner):
    """Evaluates cells one after another in the calling thread."""

    def map(self, func: Callable[[T], R], items: Sequence[T], description: str = "Evaluating") -> List[R]:
        return [func(item) for item in items]
