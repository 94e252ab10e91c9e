from fractions import Fraction

from .base import RootSystem


class A1System(RootSystem):
    """SU(2). Weights in units of the fundamental weight: spin j has highest weight 2j."""

    @property
    def name(self) -> str:
        return "A1"

    @property
    def simple_roots(self):
        return ((2,),)

    @property
    def gram(self):
        return ((Fraction(1, 2),),)

    @property
    def basis_xstar(self):
        return ((1,),)

    @property
    def semisimple(self) -> bool:
        return True

    @property
    def coordinates_help(self) -> str:
        return "A1: one integer k >= 0 (multiple of the fundamental weight); root = 2."
