from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple, Union

import numpy as np

from tensorpath.exact.biglog import log_exact
from tensorpath.lattice.step_set import WeightedStepSet
from tensorpath.sdk.exceptions import DimensionMismatch, MemoryCapExceeded
from tensorpath.utils.common import IntVector, RationalVector

DEFAULT_MEM_CAP = 2**28

Exact = Union[int, Fraction]


class CoefficientTable:
    """Exact coefficients P_N(gamma) of k(w)^N on the bounding box of N*conv(S).

    ``values`` is a dense object array (Python ints, or Fractions when some
    weight is not integral); index ``i`` holds the lattice point ``offset + i``.
    """

    def __init__(self, step_set: WeightedStepSet, N: int, offset: IntVector, values: np.ndarray):
        values.setflags(write=False)
        self.step_set = step_set
        self.N = N
        self.offset = offset
        self.values = values

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.values.shape

    def _index(self, gamma: Sequence) -> Union[Tuple[int, ...], None]:
        if len(gamma) != self.step_set.dim:
            raise DimensionMismatch(
                f"Lattice point {list(gamma)} has length {len(gamma)}, expected {self.step_set.dim}."
            )
        idx = []
        for g, o, n in zip(gamma, self.offset, self.values.shape):
            g = Fraction(g)
            if g.denominator != 1:
                return None
            i = int(g) - o
            if i < 0 or i >= n:
                return None
            idx.append(i)
        return tuple(idx)

    def value(self, gamma: Sequence) -> Exact:
        idx = self._index(gamma)
        return 0 if idx is None else self.values[idx]

    def log_value(self, gamma: Sequence) -> float:
        return log_exact(self.value(gamma))

    def items(self) -> Iterator[Tuple[IntVector, Exact]]:
        """Nonzero cells in lexicographic order of the lattice point."""
        for idx in np.ndindex(self.values.shape):
            v = self.values[idx]
            if v != 0:
                yield tuple(o + i for o, i in zip(self.offset, idx)), v

    def total(self) -> Exact:
        return sum((v for _, v in self.items()), 0)

    def mean(self) -> RationalVector:
        """Exact mean endpoint of the weighted path measure (equals N * m*_S)."""
        total = Fraction(self.total())
        dim = self.step_set.dim
        sums = [Fraction(0)] * dim
        for gamma, v in self.items():
            for i in range(dim):
                sums[i] += gamma[i] * v
        return tuple(x / total for x in sums)

    def covariance(self) -> Tuple[RationalVector, ...]:
        """Exact endpoint covariance (equals N * A(0) in lattice coordinates)."""
        total = Fraction(self.total())
        mu = self.mean()
        dim = self.step_set.dim
        acc = [[Fraction(0)] * dim for _ in range(dim)]
        for gamma, v in self.items():
            d = [g - m for g, m in zip(gamma, mu)]
            for i in range(dim):
                for j in range(dim):
                    acc[i][j] += d[i] * d[j] * v
        return tuple(tuple(a / total for a in row) for row in acc)


def required_cells(s: WeightedStepSet, N: int) -> int:
    cells = 1
    for lo, hi in zip(s.lower_corner, s.upper_corner):
        cells *= N * (hi - lo) + 1
    return cells


def _step_array(s: WeightedStepSet) -> Tuple[np.ndarray, IntVector]:
    shape = tuple(hi - lo + 1 for lo, hi in zip(s.lower_corner, s.upper_corner))
    arr = np.zeros(shape, dtype=object)
    for step, w in zip(s.steps, s.weights):
        idx = tuple(b - lo for b, lo in zip(step, s.lower_corner))
        arr[idx] = int(w) if w.denominator == 1 else w
    return arr, s.lower_corner


def _nonzero_cells(arr: np.ndarray) -> List[Tuple[int, ...]]:
    return [idx for idx in np.ndindex(arr.shape) if arr[idx] != 0]


def _convolve(
    a: Tuple[np.ndarray, IntVector], b: Tuple[np.ndarray, IntVector]
) -> Tuple[np.ndarray, IntVector]:
    (arr_a, off_a), (arr_b, off_b) = a, b
    cells_a, cells_b = _nonzero_cells(arr_a), _nonzero_cells(arr_b)
    if len(cells_b) > len(cells_a):
        (arr_a, off_a), (arr_b, off_b) = (arr_b, off_b), (arr_a, off_a)
        cells_b = cells_a
    shape = tuple(x + y - 1 for x, y in zip(arr_a.shape, arr_b.shape))
    out = np.zeros(shape, dtype=object)
    for idx in cells_b:
        window = tuple(slice(i, i + n) for i, n in zip(idx, arr_a.shape))
        out[window] += arr_a * arr_b[idx]
    return out, tuple(x + y for x, y in zip(off_a, off_b))


@lru_cache(maxsize=64)
def _power_table(s: WeightedStepSet, N: int) -> CoefficientTable:
    base = _step_array(s)
    result = None
    n = N
    while n:
        if n & 1:
            result = base if result is None else _convolve(result, base)
        n >>= 1
        if n:
            base = _convolve(base, base)
    arr, offset = result
    return CoefficientTable(s, N, offset, arr)


def count_paths(s: WeightedStepSet, N: int, mem_cap: int = DEFAULT_MEM_CAP) -> CoefficientTable:
    """Coefficients of k(w)^N by binary powering of the step array."""
    if N < 1:
        raise ValueError(f"Path length must be positive, got {N}.")
    cells = required_cells(s, N)
    if cells > mem_cap:
        raise MemoryCapExceeded(cells, mem_cap)
    return _power_table(s, N)


def count_paths_naive(s: WeightedStepSet, N: int, mem_cap: int = DEFAULT_MEM_CAP) -> CoefficientTable:
    """N-fold sequential convolution; reference for the binary-powering path."""
    if N < 1:
        raise ValueError(f"Path length must be positive, got {N}.")
    cells = required_cells(s, N)
    if cells > mem_cap:
        raise MemoryCapExceeded(cells, mem_cap)
    step = _step_array(s)
    result = step
    for _ in range(N - 1):
        result = _convolve(result, step)
    arr, offset = result
    return CoefficientTable(s, N, offset, arr)
