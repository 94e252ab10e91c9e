from fractions import Fraction
from typing import Sequence, Tuple, Union

import numpy as np
import sympy

Rational = Union[int, Fraction]
RationalVector = Tuple[Fraction, ...]
IntVector = Tuple[int, ...]


def parse_rational(value: Union[int, str, Fraction, float]) -> Fraction:
    """Parses an exact rational from an int, a "p/q" string or a Fraction.

    Floats are converted exactly (binary expansion), never rounded.
    """
    if isinstance(value, bool):
        raise TypeError("Boolean is not a valid rational value.")
    if isinstance(value, float):
        if not np.isfinite(value):
            raise ValueError(f"Non-finite value {value!r} cannot be a rational.")
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def from_sympy(value: sympy.Rational) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def fraction_to_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def vec_add(u: Sequence[Rational], v: Sequence[Rational]) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Rational], v: Sequence[Rational]) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Rational, v: Sequence[Rational]) -> tuple:
    return tuple(c * a for a in v)
