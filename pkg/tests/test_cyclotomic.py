from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import from_sympy
from qknot.cyclotomic import (IntegralityError, alexander_twist, assert_integral_in_q, block_coeff,
                              colored_jones_twist, cyclotomic_by_summands, cyclotomic_summand,
                              cyclotomic_twist, eval_q1, genfun_check, inv_q_pochhammer, q_binomial,
                              q_pochhammer)
from qknot.poly import LaurentPoly
from qknot.ratfunc import PoleError, RationalFunction

q = LaurentPoly.var("q")
M = LaurentPoly.var("M")
qs = sp.Symbol("q")


def _sym_poch(a, n):
    return sp.Mul(*[(1 - qs ** (a + j)) for j in range(n)])


def sympy_cyclotomic(p, n):
    """Independent evaluation of the twist-knot cyclotomic sum with sympy."""
    total = 0
    for k in range(n + 1):
        e = sp.Rational(n * (n + 3), 2) + p * k * (k + 1) + sp.Rational(k * (k - 1), 2)
        term = (-1) ** (n + k + 1) * qs ** e * (qs ** (2 * k + 1) - 1) * _sym_poch(1, n)
        term /= _sym_poch(1, n + k + 1) * _sym_poch(1, n - k)
        total += term
    out = sp.cancel(sp.together(total))
    num, den = sp.fraction(out)
    assert den.is_number or sp.Poly(den, qs).is_monomial
    return sp.expand(out)


def as_q(expr):
    # Laurent polynomial in q: multiply up, convert, shift back
    expr = sp.expand(expr)
    low = min((t.as_coeff_exponent(qs)[1] for t in sp.Add.make_args(expr)), default=0)
    shift = -low if low < 0 else 0
    f = from_sympy(sp.expand(expr * qs ** shift), ("q",))
    return f * LaurentPoly.var("q", -shift)


def test_pochhammer_examples():
    assert q_pochhammer(1, 0) == RationalFunction(1)
    assert q_pochhammer(1, 2) == RationalFunction((1 - q) * (1 - q ** 2))
    assert inv_q_pochhammer(1, -1) == RationalFunction(0)
    with pytest.raises(PoleError):
        q_pochhammer(1, -1)


def test_qbinomial_examples():
    assert q_binomial(2, 1) == 1 + q
    assert q_binomial(5, 0) == LaurentPoly.const(1)
    assert q_binomial(3, -1) == LaurentPoly.const(0)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 7), st.integers(0, 7))
def test_qbinomial_at_one(m, n):
    from math import comb
    b = q_binomial(m, n)
    assert b.evaluate({"q": 1}).constant_value() == (comb(m, n) if n <= m else 0)


def test_block_coeff_examples():
    assert block_coeff(5, 0) == LaurentPoly.const(1)
    assert block_coeff(1, 1) == LaurentPoly.const(0)
    assert block_coeff(2, 1) == LaurentPoly.var("q", -1) + 1 + q


def test_integrality_guard():
    with pytest.raises(IntegralityError):
        assert_integral_in_q(LaurentPoly.var("u"))


def test_cyclotomic_examples():
    for n in range(6):
        assert cyclotomic_twist(0, n) == LaurentPoly.const(1 if n == 0 else 0)
    for p in range(-3, 4):
        assert cyclotomic_twist(p, 0) == LaurentPoly.const(1)
    assert cyclotomic_twist(1, 1) == -q ** 2


@pytest.mark.parametrize("p", [-3, -1, 1, 2])
def test_cyclotomic_matches_sympy(p):
    for n in range(5):
        assert cyclotomic_twist(p, n) == as_q(sympy_cyclotomic(p, n))


@pytest.mark.parametrize("p", range(-5, 6))
def test_integrality(p):
    for n in range(13):
        f = cyclotomic_twist(p, n)
        assert f.has_integer_coefficients()
    for n in range(5):
        assert cyclotomic_by_summands(p, n) == cyclotomic_twist(p, n)


def test_truncation():
    for k in range(4, 7):
        assert cyclotomic_summand(2, 3, k).is_zero()


@settings(max_examples=50)
@given(st.integers(-20, 20), st.integers(0, 40), st.integers(0, 40))
def test_exponent_parity(p, n, k):
    assert (n * (n + 3)) % 2 == 0 and (k * (k - 1)) % 2 == 0


def test_jones_examples():
    for n in range(1, 6):
        assert colored_jones_twist(0, n) == LaurentPoly.const(1)
    for p in range(-3, 4):
        assert colored_jones_twist(p, 1) == LaurentPoly.const(1)
    assert colored_jones_twist(1, 2) == 1 - q - q ** 2 - q ** 3


@pytest.mark.parametrize("p", [-2, -1, 1, 2])
def test_jones_integral(p):
    for n in range(1, 7):
        f = colored_jones_twist(p, n)
        assert "u" not in f.vars and f.has_integer_coefficients()


def test_q1_law():
    for p in range(-5, 6):
        for n in range(11):
            assert eval_q1(p, n) == Fraction((-p) ** n)


def test_alexander_examples():
    assert alexander_twist(0) == LaurentPoly.const(1)
    assert alexander_twist(1) == M - 1 + LaurentPoly.var("M", -1)
    for p in range(-4, 5):
        d = alexander_twist(p)
        assert d.monomial_subs({"M": {"M": -1}}) == d


def test_genfun():
    assert genfun_check(0, 5)
    assert genfun_check(1, 6)
    assert genfun_check(-3, 8)
    for p in range(-5, 6):
        assert genfun_check(p, 8)
