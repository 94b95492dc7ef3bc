"""The exact arithmetic kernel in one namespace."""

from .gcd import divides, gcd_poly, primitive_part, radical, resultant
from .linalg import bareiss_det, nullspace, rref_fraction_free
from .poly import LaurentPoly, NotDivisibleError, parse, poly, var
from .ratfunc import PoleError, RationalFunction, poly_substitute

__all__ = [
    "LaurentPoly", "NotDivisibleError", "PoleError", "RationalFunction", "bareiss_det", "divides",
    "gcd_poly", "nullspace", "parse", "poly", "poly_substitute", "primitive_part", "radical",
    "resultant", "rref_fraction_free", "var",
]
