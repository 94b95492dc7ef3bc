"""Reduced quotients of Laurent polynomials.

Canonical form of ``num/den``: gcd(num, den) = 1, the denominator carries no
monomial factor (those live in the numerator as negative exponents), has
coprime integer coefficients and a positive coefficient on its lex-largest
term.  Two equal rational functions therefore compare equal structurally.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping

from .gcd import gcd_poly
from .poly import LaurentPoly, norm_coef


class PoleError(ZeroDivisionError):
    """A denominator vanished under evaluation or substitution."""


ONE = LaurentPoly.const(1)
ZERO = LaurentPoly.const(0)


class RationalFunction:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, reduced: bool = False):
        num = LaurentPoly.coerce(num)
        den = ONE if den is None else LaurentPoly.coerce(den)
        if den.is_zero():
            raise PoleError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            self._hash = None
            return
        if den.is_monomial():
            (e, c), = den.terms.items()
            num = num * LaurentPoly._raw(den.vars, {tuple(-x for x in e): norm_coef(Fraction(1) / c)})
            den = ONE
        elif not reduced:
            g = gcd_poly(num, den)
            if not g.is_constant():
                num = num.divexact(g)
                den = den.divexact(g)
        if den.is_constant():
            c = den.constant_value()
            if c != 1:
                num = num.scale(Fraction(1) / c)
                den = ONE
        else:
            m, rest = den.split_monomial()
            if any(m):
                num = num * LaurentPoly._raw(den.vars, {tuple(-x for x in m): 1})
            den = rest
            c = den.content()
            if den.leading_coefficient() < 0:
                c = -c
            if c != 1:
                inv = 1 / c
                den = den.scale(inv)
                num = num.scale(inv)
        self.num, self.den = num, den
        self._hash = None

    @staticmethod
    def coerce(x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (LaurentPoly, int, Fraction)):
            return RationalFunction(x, reduced=True)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")

    @classmethod
    def _make(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFunction":
        return cls(num, den, reduced=True)

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        """True when the value is a Laurent polynomial (denominator 1)."""
        return self.den.is_constant()

    def as_poly(self) -> LaurentPoly:
        if not self.den.is_constant():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    @property
    def vars(self):
        return LaurentPoly.common_vars(self.num, self.den)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_constant() and d.is_constant():
            return RationalFunction._make(a + c, ONE)
        if d.is_constant():
            return RationalFunction._make(a + c * b, b)
        if b.is_constant():
            return RationalFunction._make(a * d + c, d)
        if b == d:
            return RationalFunction(a + c, b)
        g = gcd_poly(b, d)
        if g.is_constant():
            return RationalFunction._make(a * d + c * b, b * d)
        b1, d1 = b.divexact(g), d.divexact(g)
        n = a * d1 + c * b1
        if n.is_zero():
            return RationalFunction(ZERO)
        h = gcd_poly(n, g)
        if not h.is_constant():
            n = n.divexact(h)
            g = g.divexact(h)
        return RationalFunction._make(n, b1 * d1 * g)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._make(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RationalFunction(ZERO)
        if b.is_constant() and d.is_constant():
            return RationalFunction._make(a * c, ONE)
        g1 = gcd_poly(a, d) if not d.is_constant() else ONE
        g2 = gcd_poly(c, b) if not b.is_constant() else ONE
        if not g1.is_constant():
            a, d = a.divexact(g1), d.divexact(g1)
        if not g2.is_constant():
            c, b = c.divexact(g2), b.divexact(g2)
        return RationalFunction._make(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise PoleError("inverse of zero")
        return RationalFunction._make(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._make(self.num ** n, self.den ** n)

    # -- equality -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- substitution ---------------------------------------------------------
    def shift(self, v: str, base: str, k: int) -> "RationalFunction":
        """Substitute v -> base**k * v; an automorphism, so no gcd is needed."""
        if k == 0:
            return self
        return RationalFunction._make(self.num.shift(v, base, k), self.den.shift(v, base, k))

    def monomial_subs(self, images, coefs=None) -> "RationalFunction":
        num = self.num.monomial_subs(images, coefs)
        den = self.den.monomial_subs(images, coefs)
        if den.is_zero():
            raise PoleError(f"denominator {self.den} vanishes under {images}")
        return RationalFunction(num, den)

    def evaluate(self, values: Mapping[str, Fraction]) -> "RationalFunction":
        try:
            den = self.den.evaluate(values)
        except ZeroDivisionError as exc:  # pragma: no cover - den has no negative powers
            raise PoleError(str(exc)) from exc
        if den.is_zero():
            raise PoleError(f"denominator {self.den} vanishes at {dict(values)}")
        return RationalFunction(self.num.evaluate(values), den)

    def subs(self, bindings: Mapping[str, object]) -> "RationalFunction":
        """Substitute rational functions for variables."""
        num = poly_substitute(self.num, bindings)
        den = poly_substitute(self.den, bindings)
        if den.is_zero():
            raise PoleError(f"denominator {self.den} vanishes under substitution")
        return num / den

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def poly_substitute(p: LaurentPoly, bindings: Mapping[str, object]) -> RationalFunction:
    """Substitute rational functions for variables of a Laurent polynomial.

    Every term is brought over one common denominator built from powers of
    the bound values' numerators and denominators, so only a single gcd is
    taken at the end.  Binding a variable absent from ``p`` is a no-op.
    A variable bound to 0 that occurs with a negative exponent raises
    :class:`PoleError`.
    """
    binds: Dict[str, RationalFunction] = {
        v: RationalFunction.coerce(x) for v, x in bindings.items() if v in p.vars
    }
    if not binds or p.is_zero():
        return RationalFunction(p, reduced=True)
    names = list(binds)
    idx = [p.vars.index(v) for v in names]
    keep = tuple(v for v in p.vars if v not in binds)
    kidx = [p.vars.index(v) for v in keep]
    lo = {v: 0 for v in names}
    hi = {v: 0 for v in names}
    for e in p.terms:
        for v, i in zip(names, idx):
            lo[v] = min(lo[v], e[i])
            hi[v] = max(hi[v], e[i])
    for v in names:
        if binds[v].is_zero() and lo[v] < 0:
            raise PoleError(f"{v} bound to 0 but occurs with exponent {lo[v]}")
    # value of v**e = num**e / den**e; common denominator den**hi * num**(-lo)
    pow_cache: Dict[tuple, LaurentPoly] = {}

    def pw(v, which, k):
        key = (v, which, k)
        if key not in pow_cache:
            base = binds[v].num if which == "n" else binds[v].den
            pow_cache[key] = base ** k
        return pow_cache[key]

    total = ZERO
    groups: Dict[tuple, Dict[tuple, object]] = {}
    for e, c in p.terms.items():
        be = tuple(e[i] for i in idx)
        ke = tuple(e[i] for i in kidx)
        groups.setdefault(be, {})[ke] = c
    for be, rest in groups.items():
        term = LaurentPoly._raw(keep, dict(rest)) if keep else LaurentPoly.const(rest[()])
        for v, x in zip(names, be):
            # num**x * den**(hi-x) * num**(-lo) ... arranged with nonnegative powers
            term = term * pw(v, "n", x - lo[v]) * pw(v, "d", hi[v] - x)
        total = total + term
    den = ONE
    for v in names:
        den = den * pw(v, "d", hi[v]) * pw(v, "n", -lo[v])
    return RationalFunction(total, den)
