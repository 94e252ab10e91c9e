from fractions import Fraction

from .base import RootSystem


class A2System(RootSystem):
    """SU(3) in fundamental-weight (Dynkin) coordinates."""

    @property
    def name(self) -> str:
        return "A2"

    @property
    def simple_roots(self):
        return ((2, -1), (-1, 2))

    @property
    def gram(self):
        # inverse Cartan matrix: <w_i, w_j>
        return (
            (Fraction(2, 3), Fraction(1, 3)),
            (Fraction(1, 3), Fraction(2, 3)),
        )

    @property
    def basis_xstar(self):
        return ((1, 0), (0, 1))

    @property
    def semisimple(self) -> bool:
        return True

    @property
    def coordinates_help(self) -> str:
        return "A2: two integers (a, b) >= 0 in fundamental weights; rho = (1, 1) is the adjoint."
