"""Non-commutative and commutative C-polynomials of twist knots.

C_p(E, Q, q) = E^|p| + sum_{i<|p|} a_p(Q, i) E^i annihilates J^_p.  Its
coefficients are given by a closed formula in q^n; every q-binomial there
has arguments independent of n, so the formula rewrites exactly in Q = q^n:

* p > 0:  q^{(p-i)(n+p+1)}  ->  Q^{p-i} q^{(p-i)(p+1)},
          (q;q)_{n+p-1} / (q;q)_{n+i}  ->  prod_{j=i+1}^{p-1} (1 - q^j Q),
          q^{(2n+p+i+1) j}  ->  Q^{2j} q^{(p+i+1) j};
* p < 0:  q^{(p-i+1)(n-p)}  ->  Q^{p-i+1} q^{-(p-i+1) p},
          (q;q)_{n-p-1} / (q;q)_{n+i}  ->  prod_{j=i+1}^{|p|-1} (1 - q^j Q),
          q^{(2n-p+i) j}  ->  Q^{2j} q^{(i-p) j}.

At q = 1 these become the commutative coefficients b_p(Q, i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import alexander_twist, cyclotomic_twist, q_binomial
from .poly import LaurentPoly
from .qweyl import WeylOp, op_reverse
from .ratfunc import RationalFunction

E = LaurentPoly.var("E")
Q = LaurentPoly.var("Q")
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly.const(0)


def _mono(**powers) -> LaurentPoly:
    return LaurentPoly.monomial(powers)


def binom(m: int, n: int) -> int:
    """Binomial coefficient m(m-1)...(m-n+1)/n! for any integer m; 0 for n < 0."""
    if n < 0:
        return 0
    num, den = 1, 1
    for j in range(n):
        num *= m - j
        den *= j + 1
    return num // den


@dataclass(frozen=True)
class CPolyNC:
    p: int
    op: WeylOp

    def poly(self) -> LaurentPoly:
        """Commutative image in (E, Q, q) with E-powers on the right."""
        return self.op.to_poly()


@dataclass(frozen=True)
class CPolyC:
    p: int
    poly: LaurentPoly


# -- non-commutative C-polynomial ---------------------------------------------------

def _prod_one_minus(lo: int, hi: int) -> LaurentPoly:
    """prod_{j=lo}^{hi} (1 - q^j Q)."""
    out = ONE
    for j in range(lo, hi + 1):
        out = out * (ONE - _mono(q=j, Q=1))
    return out


@lru_cache(maxsize=None)
def nc_coefficient(p: int, i: int) -> LaurentPoly:
    """a_p(Q, i) in Z[Q^{+-1}, q^{+-1}] for 0 <= i < |p|."""
    m = abs(p)
    if not 0 <= i < m:
        raise ValueError(f"coefficient index {i} out of range for p = {p}")
    if p > 0:
        s = ZERO
        for j in range(i + 1):
            s = s + _mono(Q=2 * j, q=(p + i + 1) * j) * q_binomial(p - j, p - i) * q_binomial(p - i + j - 1, j)
        for j in range(i):
            s = s - _mono(Q=2 * j + 1, q=(p + i + 1) * j + p) * q_binomial(p - j - 1, p - i) * q_binomial(p - i + j - 1, j)
        pre = _mono(Q=p - i, q=(p - i) * (p + 1))
    else:
        s = ZERO
        for j in range(i + 1):
            s = s - _mono(Q=2 * j, q=(i - p) * j) * q_binomial(-p - j - 1, i - j) * q_binomial(-p - i + j, j)
        for j in range(i):
            s = s + _mono(Q=2 * j + 1, q=(i - p) * j - p) * q_binomial(-p - j - 2, i - j - 1) * q_binomial(-p - i + j, j)
        pre = _mono(Q=p - i + 1, q=-(p - i + 1) * p)
    return pre * _prod_one_minus(i + 1, m - 1) * s


@lru_cache(maxsize=None)
def nc_cpoly(p: int) -> CPolyNC:
    """C_p(E, Q, q), monic of E-degree |p|."""
    coeffs = {abs(p): 1}
    for i in range(abs(p)):
        coeffs[i] = nc_coefficient(p, i)
    return CPolyNC(p, WeylOp(coeffs))


# -- commutative C-polynomial -------------------------------------------------------

@lru_cache(maxsize=None)
def c_coefficient(p: int, i: int) -> LaurentPoly:
    """b_p(Q, i); for p < 0 the monomial prefactor is Q^{p-i+1}."""
    m = abs(p)
    if not 0 <= i < m:
        raise ValueError(f"coefficient index {i} out of range for p = {p}")
    if p > 0:
        s = ZERO
        for j in range(i + 1):
            s = s + Q ** (2 * j) * (binom(p - j, p - i) * binom(p - i + j - 1, j))
        for j in range(i):
            s = s - Q ** (2 * j + 1) * (binom(p - j - 1, p - i) * binom(p - i + j - 1, j))
        return Q ** (p - i) * (ONE - Q) ** (p - i - 1) * s
    s = ZERO
    for j in range(i + 1):
        s = s - Q ** (2 * j) * (binom(-p - j - 1, i - j) * binom(-p - i + j, j))
    for j in range(i):
        s = s + Q ** (2 * j + 1) * (binom(-p - j - 2, i - j - 1) * binom(-p - i + j, j))
    return Q ** (p - i + 1) * (ONE - Q) ** (-p - i - 1) * s


@lru_cache(maxsize=None)
def cpoly_closed(p: int) -> CPolyC:
    out = E ** abs(p)
    for i in range(abs(p)):
        out = out + c_coefficient(p, i) * E ** i
    return CPolyC(p, out)


X_FACTOR = Q - Q ** 2 + E + Q ** 2 * E


@lru_cache(maxsize=None)
def _recursive(p: int) -> LaurentPoly:
    if p == 0:
        return ONE
    if p == 1:
        return Q + E
    if p == -1:
        return E - 1
    if p > 0:
        return X_FACTOR * _recursive(p - 1) - Q ** 2 * E ** 2 * _recursive(p - 2)
    qinv2 = Q ** -2
    return X_FACTOR * qinv2 * _recursive(p + 1) - E ** 2 * qinv2 * _recursive(p + 2)


def cpoly_recursive(p: int) -> CPolyC:
    """C_p from the 3-term relations in p, started at C_0 = 1 and C_{+-1}."""
    return CPolyC(p, _recursive(p))


# -- backward-shift forms ------------------------------------------------------------

BACKWARD_FACTOR = Q * E - Q ** 2 * (E - 1) + 1


def backward_form(p: int) -> LaurentPoly:
    """D_p = C_p^op."""
    return op_reverse(cpoly_closed(p).poly)


def backward_recursion_holds(p: int) -> bool:
    """D_p = B D_{p-1} - Q^2 D_{p-2} with B = QE - Q^2(E - 1) + 1."""
    return backward_form(p) == BACKWARD_FACTOR * backward_form(p - 1) - Q ** 2 * backward_form(p - 2)


def backward_coefficient(p: int, i: int) -> LaurentPoly:
    """b'_p(Q, i): coefficient of E^i in D_p for 1 <= i <= |p|."""
    if p > 0:
        s = ZERO
        for j in range(p - i + 1):
            s = s + Q ** (2 * j) * (binom(p - j, i) * binom(i + j - 1, j))
        for j in range(p - i):
            s = s - Q ** (2 * j + 1) * (binom(p - j - 1, i) * binom(i + j - 1, j))
        return Q ** i * (ONE - Q) ** (i - 1) * s
    s = ZERO
    for j in range(-p - i + 1):
        s = s - Q ** (2 * j) * (binom(-p - j - 1, i - 1) * binom(i + j, j))
    for j in range(-p - i):
        s = s + Q ** (2 * j + 1) * (binom(-p - j - 2, i - 1) * binom(i + j, j))
    return Q ** i * (ONE - Q) ** (i - 1) * Q ** (2 * p + 1) * s


def backward_closed(p: int) -> LaurentPoly:
    """1 + sum_i b'_p(Q, i) E^i."""
    out = ONE
    for i in range(1, abs(p) + 1):
        out = out + backward_coefficient(p, i) * E ** i
    return out


@lru_cache(maxsize=None)
def nc_backward_coeffs(p: int, i: int) -> RationalFunction:
    """a'_p(n, i) with q^n written as Q.

    The factorial ratio (q;q)_{n-1}/(q;q)_{n-i} is rewritten as
    prod_{j=1}^{i-1} (1 - Q q^{-j}), valid for n >= i.
    """
    m = abs(p)
    if not 1 <= i <= m:
        raise ValueError(f"index {i} out of range for p = {p}")
    ratio = ONE
    for j in range(1, i):
        ratio = ratio * (ONE - _mono(Q=1, q=-j))
    s = ZERO
    if p > 0:
        for j in range(p - i + 1):
            s = s + _mono(Q=2 * j, q=(1 - i) * j) * q_binomial(p - j, i) * q_binomial(i + j - 1, j)
        for j in range(p - i):
            s = s - _mono(Q=2 * j + 1, q=(1 - i) * j) * q_binomial(p - j - 1, i) * q_binomial(i + j - 1, j)
        pre = _mono(Q=i, q=i)
    else:
        for j in range(-p - i + 1):
            s = s - _mono(Q=2 * j, q=-i * j) * q_binomial(-p - j - 1, i - 1) * q_binomial(i + j, j)
        for j in range(-p - i):
            s = s + _mono(Q=2 * j + 1, q=-i * j) * q_binomial(-p - j - 2, i - 1) * q_binomial(i + j, j)
        pre = _mono(Q=2 * p + i + 1)
    return RationalFunction(pre * ratio * s, reduced=True)


def backward_recursion_residual(p: int, n: int) -> LaurentPoly:
    """J^_p(n) + sum_i a'_p(n, i) J^_p(n - i), for n >= |p|."""
    if n < abs(p):
        raise ValueError("the backward recursion is stated for n >= |p|")
    out = cyclotomic_twist(p, n)
    for i in range(1, abs(p) + 1):
        c = nc_backward_coeffs(p, i).monomial_subs({"Q": {"q": n}}).as_poly()
        out = out + c * cyclotomic_twist(p, n - i)
    return out


# -- Alexander polynomial and q = 1 -------------------------------------------------

def alexander_specialization(p: int) -> bool:
    """C_p^op(M - 2 + 1/M, 1) == Delta_p(M)."""
    d = backward_form(p).evaluate({"Q": 1})
    M = LaurentPoly.var("M")
    z = M - 2 + LaurentPoly.var("M", -1)
    value = ZERO
    for j, c in d.coefficients_in("E").items():
        value = value + c * z ** j
    return value == alexander_twist(p)


def q1_sequence_residual(p: int, n: int):
    """Apply C_p(E, 1) to the sequence (-p)^n at n."""
    c = cpoly_closed(p).poly.evaluate({"Q": 1})
    total = 0
    for j, a in c.coefficients_in("E").items():
        total += a.constant_value() * (-p) ** (n + j)
    return total


# -- summand identities for the backward relation --------------------------------

def summand(p: int, l: int, i: int, j: int) -> RationalFunction:
    """s^{(l)}_p(E, Q, i, j) for p > 0 (the summands of D_p)."""
    if l == 1:
        b = binom(p - j, p - i - j)
        shift = 0
    elif l == 2:
        b = binom(p - j - 1, p - i - j - 1)
        shift = 1
    else:
        raise ValueError("l must be 1 or 2")
    if j < 0:
        return RationalFunction(0)
    b *= binom(i + j - 1, j)
    if b == 0:
        return RationalFunction(0)
    base = Q ** (i + 2 * j + shift) * E ** i
    one_minus = RationalFunction(ONE - Q) ** (i - 1)
    return one_minus * RationalFunction(base.scale(b), reduced=True)


def summand_recursion_residual(p: int, l: int, i: int, j: int) -> RationalFunction:
    """-Q^2 s_{p-2}(i, j-1) - E(Q - 1)Q s_{p-1}(i-1, j) + Q^2 s_{p-1}(i, j-1)
    + s_{p-1}(i, j) - s_p(i, j)."""
    s = lambda pp, ii, jj: summand(pp, l, ii, jj)
    return (-(Q ** 2) * s(p - 2, i, j - 1) - E * (Q - 1) * Q * s(p - 1, i - 1, j)
            + Q ** 2 * s(p - 1, i, j - 1) + s(p - 1, i, j) - s(p, i, j))


def summand_sum_check(p: int) -> bool:
    """D_p = 1 + sum s^(1)_p - sum s^(2)_p."""
    total = RationalFunction(1)
    for i in range(1, p + 1):
        for j in range(p - i + 1):
            total = total + summand(p, 1, i, j)
        for j in range(p - i):
            total = total - summand(p, 2, i, j)
    return total == backward_form(p)
