"""q-factorials, q-binomials and the cyclotomic function of twist knots.

The cyclotomic function of the twist knot K_p is the finite sum

    J^_p(n) = sum_{k=0}^{n} (-1)^{n+k+1} q^{n(n+3)/2 + p k(k+1) + k(k-1)/2}
              (q^{2k+1} - 1) (q;q)_n / ((q;q)_{n+k+1} (q;q)_{n-k})

(summands with k > n vanish because 1/(q;q)_{n-k} = 0 there).  Each summand
has a pole at q = 1; only the sum lies in Z[q^{+-1}].
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .poly import LaurentPoly
from .qweyl import QSequence
from .ratfunc import PoleError, RationalFunction

Q_VAR = "q"
U_VAR = "u"

ONE = LaurentPoly.const(1)
ZERO = LaurentPoly.const(0)


class IntegralityError(ArithmeticError):
    """A value that must lie in Z[q^{+-1}] did not."""


def _q(e: int) -> LaurentPoly:
    return LaurentPoly.var(Q_VAR, e)


def _one_minus_q(e: int) -> LaurentPoly:
    """1 - q**e."""
    return ONE - _q(e)


# -- q-factorials --------------------------------------------------------------

def q_pochhammer(a: int, n: int) -> RationalFunction:
    """(q^a; q)_n with the three-branch convention for n > 0, n = 0, n < 0."""
    if n >= 0:
        out = ONE
        for j in range(n):
            out = out * _one_minus_q(a + j)
        return RationalFunction(out, reduced=True)
    den = ONE
    for j in range(1, -n + 1):
        if a - j == 0:
            raise PoleError(f"(q^{a};q)_{n} has the factor 1 - q^0 in its denominator")
        den = den * _one_minus_q(a - j)
    return RationalFunction(ONE, den)


def inv_q_pochhammer(a: int, n: int) -> RationalFunction:
    """1 / (q^a; q)_n, which is 0 when the n < 0 branch contains 1 - q^0."""
    if n < 0 and 0 < a <= -n:
        return RationalFunction(0)
    if n < 0:
        out = ONE
        for j in range(1, -n + 1):
            out = out * _one_minus_q(a - j)
        return RationalFunction(out, reduced=True)
    return q_pochhammer(a, n).inverse()


def q_factorial(n: int) -> LaurentPoly:
    """(q; q)_n for n >= 0."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    return _qfac(n)


@lru_cache(maxsize=None)
def _qfac(n: int) -> LaurentPoly:
    return ONE if n == 0 else _qfac(n - 1) * _one_minus_q(n)


@lru_cache(maxsize=None)
def q_binomial(m: int, n: int) -> LaurentPoly:
    """Gaussian binomial (q^{m-n+1}; q)_n / (q; q)_n, and 0 for n < 0.

    The product form is used (not a ratio of factorials) so that negative
    top arguments such as [-1 choose 0] = 1 come out right.
    """
    if n < 0:
        return ZERO
    if n == 0:
        return ONE
    num = ONE
    for j in range(n):
        e = m - n + 1 + j
        if e == 0:
            return ZERO
        num = num * _one_minus_q(e)
    return num.divexact(_qfac(n))


# -- block coefficients over u = q^{1/2} -----------------------------------------

def brace(a: int) -> LaurentPoly:
    """{a} = (u^a - u^-a) / (u - u^-1) as a Laurent polynomial in u."""
    if a == 0:
        return ZERO
    if a < 0:
        return -brace(-a)
    return LaurentPoly({(2 * j - a + 1,): 1 for j in range(a)}, (U_VAR,))


def assert_integral_in_q(p: LaurentPoly) -> LaurentPoly:
    """Convert a Laurent polynomial in u = q^{1/2} back to q; odd u-powers are an error."""
    if U_VAR not in p.vars:
        return p
    i = p.vars.index(U_VAR)
    terms = {}
    for e, c in p.terms.items():
        if e[i] % 2:
            raise IntegralityError(f"odd power u^{e[i]} in {p}")
        terms[e[:i] + (e[i] // 2,) + e[i + 1:]] = c
    vars_ = list(p.vars)
    vars_[i] = Q_VAR
    return LaurentPoly(terms, vars_)


@lru_cache(maxsize=None)
def block_coeff(n: int, k: int) -> LaurentPoly:
    """C(n, k) = prod_{j=1}^{k} {n-j}{n+j}; zero once some brace index is 0."""
    out = ONE
    for j in range(1, k + 1):
        out = out * brace(n - j) * brace(n + j)
        if out.is_zero():
            return ZERO
    return assert_integral_in_q(out)


# -- the cyclotomic function ----------------------------------------------------

def _exponent(p: int, n: int, k: int) -> int:
    return (n * (n + 3) + k * (k - 1)) // 2 + p * k * (k + 1)


def cyclotomic_summand(p: int, n: int, k: int) -> RationalFunction:
    """Summand k of J^_p(n), built factor by factor from the definition."""
    sign = -1 if (n + k + 1) % 2 else 1
    num = _q(_exponent(p, n, k)).scale(sign) * (_q(2 * k + 1) - ONE)
    val = RationalFunction(num, reduced=True) * q_pochhammer(1, n)
    return val * inv_q_pochhammer(1, n + k + 1) * inv_q_pochhammer(1, n - k)


def cyclotomic_by_summands(p: int, n: int) -> LaurentPoly:
    """Reference evaluation: add the rational summands one by one."""
    total = RationalFunction(0)
    for k in range(n + 1):
        total = total + cyclotomic_summand(p, n, k)
    if not total.is_polynomial():
        raise IntegralityError(f"J^_{p}({n}) summed to {total}")
    return total.as_poly()


def _mul_one_minus(a: list, m: int) -> list:
    """Dense coefficient list times (1 - q^m)."""
    out = a + [0] * m
    for i, c in enumerate(a):
        if c:
            out[i + m] -= c
    return out


def _div_one_minus(a: list, m: int) -> list:
    """Exact quotient of a dense coefficient list by (1 - q^m)."""
    r = list(a)
    for i in range(m, len(r)):
        r[i] += r[i - m]
    if any(r[len(r) - m:]):
        raise IntegralityError(f"1 - q^{m} does not divide the numerator")
    return r[: len(r) - m]


@lru_cache(maxsize=None)
def cyclotomic_twist(p: int, n: int) -> LaurentPoly:
    """J^_p(n) in Z[q^{+-1}].

    The common denominator of the summands is (q;q)_{2n+1}: summand k times
    it equals (-1)^{n+k} q^e (1 - q^{2k+1}) prod (1 - q^m) over n+k+2 <= m <= 2n+1
    and n-k+1 <= m <= n.  The numerators are summed as dense integer lists
    and the denominator is divided out one factor at a time.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    exps = [_exponent(p, n, k) for k in range(n + 1)]
    lo = min(exps)
    parts = []
    for k in range(n + 1):
        num = [1]
        for m in (2 * k + 1, *range(n + k + 2, 2 * n + 2), *range(n - k + 1, n + 1)):
            num = _mul_one_minus(num, m)
        sign = 1 if (n + k + 1) % 2 else -1
        parts.append((exps[k] - lo, sign, num))
    size = max(off + len(num) for off, _, num in parts)
    total = [0] * size
    for off, sign, num in parts:
        for i, c in enumerate(num):
            total[off + i] += sign * c
    for m in range(1, 2 * n + 2):
        total = _div_one_minus(total, m)
    return LaurentPoly({(lo + i,): c for i, c in enumerate(total) if c}, (Q_VAR,))


def twist_sequence(p: int) -> QSequence:
    """J^_p as a memoized sequence."""
    return QSequence(lambda n: cyclotomic_twist(p, n), name=f"Jhat_{p}")


@lru_cache(maxsize=None)
def colored_jones_twist(p: int, n: int) -> LaurentPoly:
    """J_p(n) = sum_{k=0}^{n-1} C(n, k) J^_p(k) for n >= 1."""
    if n < 1:
        raise ValueError("the colored Jones function is indexed by n >= 1")
    out = ZERO
    for k in range(n):
        out = out + block_coeff(n, k) * cyclotomic_twist(p, k)
    return out


def eval_q1(p: int, n: int) -> Fraction:
    """J^_p(n) at q = 1, taken on the summed polynomial."""
    v = cyclotomic_twist(p, n).evaluate({Q_VAR: 1})
    return Fraction(v.constant_value())


def alexander_twist(p: int) -> LaurentPoly:
    """Delta_p(M) = 1 + p (M + 1/M - 2)."""
    M = LaurentPoly.var("M")
    return ONE + (M + LaurentPoly.var("M", -1) - 2).scale(p)


def genfun_check(p: int, N: int) -> bool:
    """Delta_p(M) * sum_{n<=N} I_p(n) z^n = 1 mod z^{N+1} with z = M - 2 + 1/M.

    Since z^{N+1} = (M - 1)^{2N+2} / M^{N+1}, the congruence is tested by
    exact divisibility of the difference by (M - 1)^{2N+2}.
    """
    M = LaurentPoly.var("M")
    z = M - 2 + LaurentPoly.var("M", -1)
    series = ZERO
    zn = ONE
    for n in range(N + 1):
        series = series + zn.scale(eval_q1(p, n))
        zn = zn * z
    diff = alexander_twist(p) * series - ONE
    if diff.is_zero():
        return True
    return ((M - 1) ** (2 * N + 2)).divides(diff)
