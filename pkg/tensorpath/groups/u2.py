from fractions import Fraction

from .base import RootSystem


class U2System(RootSystem):
    """U(2) on the diagonal torus: t* = R^2 with the Euclidean form, alpha = (1, -1).

    The root subspace X* is the line x1 + x2 = 0 and L* = Z(1, -1).
    """

    @property
    def name(self) -> str:
        return "U2"

    @property
    def simple_roots(self):
        return ((1, -1),)

    @property
    def gram(self):
        return ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))

    @property
    def basis_xstar(self):
        return ((1, -1),)

    @property
    def semisimple(self) -> bool:
        return False

    @property
    def coordinates_help(self) -> str:
        return "U2: two integers (l1, l2) with l1 >= l2 (a partition-like pair)."
