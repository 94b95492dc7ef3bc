"""Exact q-difference machinery for twist knots: cyclotomic functions,
non-commutative C-polynomials, creative telescoping and the phi-bridge to
A-polynomials."""

from .poly import LaurentPoly, parse, poly, var
from .ratfunc import PoleError, RationalFunction, poly_substitute

__version__ = "0.1.0"
