"""Symbolic q-proper hypergeometric terms in integer indices.

A term is

    const * (-1)^{sign} * q^{expo} * prod (q;q)_{L}^{m_L} * prod (q^{L} - 1)^{m'_L}
          * prod qbinom(A, B)

with ``sign`` and every L, A, B linear forms in the indices n, k, p, i, j
and ``expo`` a quadratic form.  Shifting an index keeps the shape, and the
quotient of two terms whose factorials differ only by constant offsets is a
rational function of q and the exponentials Q = q^n, K = q^k, P = q^p,
I = q^i, J = q^j.

Terms can also be specialized at integer values of some indices; once all
indices are fixed, :meth:`QProperTerm.value` evaluates with the product
definitions (so 1/(q;q)_m = 0 for m < 0 and qbinom(-1, 0) = 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Tuple

from .cyclotomic import inv_q_pochhammer, q_binomial, q_pochhammer
from .poly import LaurentPoly
from .ratfunc import PoleError, RationalFunction

INDICES = ("n", "k", "p", "i", "j")
EXPONENTIAL = {"n": "Q", "k": "K", "p": "P", "i": "I", "j": "J"}


@dataclass(frozen=True)
class Lin:
    """c + sum coef[v] * v over the indices."""

    coef: Tuple[int, ...] = (0, 0, 0, 0, 0)
    const: int = 0

    @staticmethod
    def of(const: int = 0, **coefs: int) -> "Lin":
        return Lin(tuple(coefs.get(v, 0) for v in INDICES), const)

    def __add__(self, other: "Lin") -> "Lin":
        return Lin(tuple(a + b for a, b in zip(self.coef, other.coef)), self.const + other.const)

    def __neg__(self) -> "Lin":
        return Lin(tuple(-a for a in self.coef), -self.const)

    def __sub__(self, other: "Lin") -> "Lin":
        return self + (-other)

    def plus(self, c: int) -> "Lin":
        return Lin(self.coef, self.const + c)

    def shift(self, d: Mapping[str, int]) -> "Lin":
        extra = sum(c * d.get(v, 0) for v, c in zip(INDICES, self.coef))
        return Lin(self.coef, self.const + extra)

    def subs(self, values: Mapping[str, int]) -> "Lin":
        coef = list(self.coef)
        const = self.const
        for idx, v in enumerate(INDICES):
            if v in values and coef[idx]:
                const += coef[idx] * values[v]
                coef[idx] = 0
        return Lin(tuple(coef), const)

    def is_constant(self) -> bool:
        return not any(self.coef)

    def q_power(self) -> LaurentPoly:
        """q^{self} as a monomial in q and the exponentials."""
        powers = {EXPONENTIAL[v]: c for v, c in zip(INDICES, self.coef) if c}
        powers["q"] = powers.get("q", 0) + self.const
        return LaurentPoly.monomial(powers)


def _index_poly(lin: Lin) -> LaurentPoly:
    out = LaurentPoly.const(lin.const)
    for v, c in zip(INDICES, lin.coef):
        if c:
            out = out + LaurentPoly.var(v).scale(c)
    return out


def _shift_quadratic(f: LaurentPoly, d: Mapping[str, int]) -> LaurentPoly:
    """f(x + d) for a polynomial in the index variables."""
    out = LaurentPoly.const(0)
    for e, c in f.terms.items():
        term = LaurentPoly.const(c)
        for v, x in zip(f.vars, e):
            term = term * (LaurentPoly.var(v) + d.get(v, 0)) ** x
        out = out + term
    return out


def _linear_to_monomial(f: LaurentPoly) -> LaurentPoly:
    """q^{f} for f linear with integer coefficients."""
    if f.terms and f.total_degree() > 1:
        raise ValueError(f"exponent difference {f} is not linear")
    powers: Dict[str, int] = {}
    for e, c in f.terms.items():
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError(f"exponent difference {f} has a non-integer coefficient")
        if not any(e):
            powers["q"] = powers.get("q", 0) + int(c)
            continue
        (pos,) = [t for t, x in enumerate(e) if x]
        powers[EXPONENTIAL[f.vars[pos]]] = int(c)
    return LaurentPoly.monomial(powers)


@dataclass(frozen=True)
class QProperTerm:
    const: RationalFunction = field(default_factory=lambda: RationalFunction(1))
    sign: Lin = Lin()
    expo: LaurentPoly = field(default_factory=lambda: LaurentPoly.const(0))
    facs: Tuple[Tuple[Lin, int], ...] = ()
    qminus: Tuple[Tuple[Lin, int], ...] = ()
    qbinoms: Tuple[Tuple[Lin, Lin], ...] = ()

    # -- transformations ------------------------------------------------------
    def shift(self, **d: int) -> "QProperTerm":
        return QProperTerm(
            self.const,
            self.sign.shift(d),
            _shift_quadratic(self.expo, d),
            tuple((L.shift(d), m) for L, m in self.facs),
            tuple((L.shift(d), m) for L, m in self.qminus),
            tuple((A.shift(d), B.shift(d)) for A, B in self.qbinoms),
        )

    def subs(self, **values: int) -> "QProperTerm":
        """Fix some indices at integers; fully constant q-binomials are evaluated."""
        const = self.const
        binoms = []
        for A, B in self.qbinoms:
            A, B = A.subs(values), B.subs(values)
            if A.is_constant() and B.is_constant():
                const = const * RationalFunction(q_binomial(A.const, B.const), reduced=True)
            else:
                binoms.append((A, B))
        expo = self.expo.evaluate({v: x for v, x in values.items()}) if values else self.expo
        return QProperTerm(
            const,
            self.sign.subs(values),
            expo,
            tuple((L.subs(values), m) for L, m in self.facs),
            tuple((L.subs(values), m) for L, m in self.qminus),
            tuple(binoms),
        )

    def scale(self, c) -> "QProperTerm":
        return QProperTerm(RationalFunction.coerce(c) * self.const, self.sign, self.expo, self.facs, self.qminus, self.qbinoms)

    def is_zero(self) -> bool:
        return self.const.is_zero()

    def _expanded_facs(self):
        """Factorial multiplicities with q-binomials written as factorial ratios."""
        out: Dict[Lin, int] = {}
        for L, m in self.facs:
            out[L] = out.get(L, 0) + m
        for A, B in self.qbinoms:
            for L, m in ((A, 1), (B, -1), (A - B, -1)):
                out[L] = out.get(L, 0) + m
        return out

    # -- evaluation -----------------------------------------------------------
    def value(self) -> RationalFunction:
        """Exact value once every index is fixed."""
        if self.expo.vars or not self.sign.is_constant():
            raise ValueError("value() needs every index fixed")
        out = self.const
        if out.is_zero():
            return out
        if self.sign.const % 2:
            out = -out
        e = Fraction(self.expo.constant_value()) if self.expo.terms else Fraction(0)
        if e.denominator != 1:
            raise ValueError(f"q-exponent {e} is not an integer")
        out = out * RationalFunction(LaurentPoly.var("q", int(e)), reduced=True)
        for A, B in self.qbinoms:
            if not (A.is_constant() and B.is_constant()):
                raise ValueError("value() needs every index fixed")
            out = out * RationalFunction(q_binomial(A.const, B.const), reduced=True)
        for L, m in self.facs:
            if not L.is_constant():
                raise ValueError("value() needs every index fixed")
            if m > 0:
                out = out * q_pochhammer(1, L.const) ** m
            else:
                out = out * inv_q_pochhammer(1, L.const) ** (-m)
            if out.is_zero():
                return out
        for L, m in self.qminus:
            f = RationalFunction(LaurentPoly.var("q", L.const) - 1, reduced=True)
            if f.is_zero() and m < 0:
                raise PoleError(f"factor q^{L.const} - 1 vanishes in a denominator")
            out = out * f ** m
        return out


def _fac_ratio(L: Lin, lo: int, hi: int) -> LaurentPoly:
    """(q;q)_{L+hi} / (q;q)_{L+lo} = prod_{m=lo+1}^{hi} (1 - q^{L+m}) for hi >= lo."""
    out = LaurentPoly.const(1)
    for m in range(lo + 1, hi + 1):
        out = out * (1 - L.plus(m).q_power())
    return out


def quotient(a: QProperTerm, b: QProperTerm) -> RationalFunction:
    """a / b as a rational function of q, Q, K, P, I, J.

    Requires the two terms to have the same shape: equal sign parity in every
    index, a linear difference of q-exponents, and factorials that pair up
    by their non-constant part.
    """
    if b.is_zero():
        raise PoleError("division by a zero term")
    if a.is_zero():
        return RationalFunction(0)
    ds = a.sign - b.sign
    if any(c % 2 for c in ds.coef):
        raise ValueError("sign parities differ; the quotient is not rational")
    out = a.const / b.const
    if ds.const % 2:
        out = -out
    out = out * RationalFunction(_linear_to_monomial(a.expo - b.expo), reduced=True)
    groups: Dict[Tuple[int, ...], Dict[int, int]] = {}
    for sgn, term in ((1, a), (-1, b)):
        for L, m in term._expanded_facs().items():
            g = groups.setdefault(L.coef, {})
            g[L.const] = g.get(L.const, 0) + sgn * m
    num = LaurentPoly.const(1)
    den = LaurentPoly.const(1)
    for coef, consts in groups.items():
        consts = {c: m for c, m in consts.items() if m}
        if not consts:
            continue
        if not any(coef):
            for c, m in consts.items():
                out = out * q_pochhammer(1, c) ** m
            continue
        if sum(consts.values()):
            raise ValueError("factorials do not pair up; the quotient is not rational")
        base = min(consts)
        L = Lin(coef, 0)
        for c, m in consts.items():
            if c == base:
                continue
            f = _fac_ratio(L, base, c)
            if m > 0:
                num = num * f ** m
            else:
                den = den * f ** (-m)
    out = out * RationalFunction(num, den)
    qm: Dict[Lin, int] = {}
    for sgn, term in ((1, a), (-1, b)):
        for L, m in term.qminus:
            qm[L] = qm.get(L, 0) + sgn * m
    for L, m in qm.items():
        if m:
            out = out * RationalFunction(L.q_power() - 1) ** m
    return out


def ratio(t: QProperTerm, **d: int) -> RationalFunction:
    """t(x + d) / t(x)."""
    return quotient(t.shift(**d), t)


# -- built-in terms ---------------------------------------------------------------

def twist_summand(p: int | None = None) -> QProperTerm:
    """s_p(n, k); with p None the twist parameter stays symbolic."""
    n, k = Lin.of(n=1), Lin.of(k=1)
    expo = (LaurentPoly.var("n") * (LaurentPoly.var("n") + 3) + LaurentPoly.var("k") * (LaurentPoly.var("k") - 1)).scale(Fraction(1, 2))
    pk = LaurentPoly.var("k") * (LaurentPoly.var("k") + 1)
    expo = expo + (pk.scale(p) if p is not None else LaurentPoly.var("p") * pk)
    return QProperTerm(
        sign=n + k + Lin.of(1),
        expo=expo,
        facs=((n, 1), (n + k + Lin.of(1), -1), (n - k, -1)),
        qminus=((Lin.of(1, k=2), 1),),
    )


def binomial_theorem_summand() -> QProperTerm:
    """qbinom(n, k) (-1)^k q^{k(k-1)/2}; its sum over k is (1; q)_n = delta_{n,0}."""
    kk = LaurentPoly.var("k")
    return QProperTerm(
        sign=Lin.of(k=1),
        expo=(kk * (kk - 1)).scale(Fraction(1, 2)),
        qbinoms=((Lin.of(n=1), Lin.of(k=1)),),
    )


def t_term(h: int, negative: bool = False) -> QProperTerm:
    """t^{(h)}_p(n, k, i, j) in all five indices, for the p > 0 or p < 0 branch."""
    n, i, j = (LaurentPoly.var(v) for v in ("n", "i", "j"))
    N, K_, P, I, J = (Lin.of(**{v: 1}) for v in ("n", "k", "p", "i", "j"))
    facs = (
        (N.plus(-1), 1), (N + K_ + Lin.of(1), 1), (N - K_, 1),
        (N, -1), (N + K_ - I + Lin.of(1), -1), (N - I - K_, -1),
    )
    base = (i * (2 * n - i + 3)).scale(Fraction(-1, 2))
    if not negative:
        expo = base + i * (n + 1) + (2 * n - i + 1) * j
        top = P - J if h == 1 else P - J - Lin.of(1)
        bottom = P - I - J if h == 1 else P - I - J - Lin.of(1)
        binoms = ((top, bottom), (I + J - Lin.of(1), J))
    else:
        p = LaurentPoly.var("p")
        expo = base + (2 * p + i + 1) * n + (2 * n - i) * j
        top = -P - J - Lin.of(1) if h == 1 else -P - J - Lin.of(2)
        bottom = -P - I - J if h == 1 else -P - I - J - Lin.of(1)
        binoms = ((top, bottom), (I + J, J))
    return QProperTerm(sign=I, expo=expo, facs=facs, qbinoms=binoms)
