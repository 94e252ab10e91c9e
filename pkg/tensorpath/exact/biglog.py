from fractions import Fraction
import math
from typing import Union

_MANTISSA_BITS = 64
_LOG2 = math.log(2.0)


def _log_positive_int(n: int) -> float:
    bits = n.bit_length()
    shift = max(bits - _MANTISSA_BITS, 0)
    top = n >> shift
    # the discarded low limbs shift log(top) by less than 2**-63 relative
    return math.log(top) + shift * _LOG2


def log_exact(value: Union[int, Fraction]) -> float:
    """Natural log of an exact nonnegative integer or rational; -inf for zero."""
    if value < 0:
        raise ValueError(f"Cannot take the log of negative value {value}.")
    if value == 0:
        return -math.inf
    if isinstance(value, Fraction):
        return _log_positive_int(value.numerator) - _log_positive_int(value.denominator)
    return _log_positive_int(int(value))
