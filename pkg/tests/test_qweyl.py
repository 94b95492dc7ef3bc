import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qknot.poly import LaurentPoly, parse
from qknot.qweyl import (QSequence, WeylOp, constant_sequence, make_monic, op_reverse, right_divmod,
                         specialize, weyl_apply, weyl_mul)
from qknot.ratfunc import PoleError, RationalFunction

E_OP = WeylOp.shift(1)
Q, q, E = (LaurentPoly.var(v) for v in "QqE")


def test_commutation():
    assert E_OP * WeylOp.scalar(Q) == WeylOp({1: q * Q})
    alpha = RationalFunction(1, 1 - Q)
    assert E_OP * WeylOp.scalar(alpha) == WeylOp({1: RationalFunction(1, 1 - q * Q)})
    P = WeylOp({0: Q, 2: q})
    assert WeylOp.scalar(1) * P == P


def test_apply_examples():
    one = constant_sequence(1)
    for n in range(5):
        assert weyl_apply(E_OP - 1, one, n).is_zero()
    assert weyl_apply(WeylOp.scalar(Q), one, 3) == RationalFunction(q ** 3)


def test_apply_pole():
    op = WeylOp.scalar(RationalFunction(1, 1 - Q))
    with pytest.raises(PoleError):
        weyl_apply(op, constant_sequence(1), 0)


def test_reverse_examples():
    assert op_reverse(Q + E) == 1 + Q * E
    assert op_reverse(E) == LaurentPoly.const(1)


def test_specialize_examples():
    c1 = WeylOp({0: q ** 2 * Q, 1: 1})
    assert specialize(c1, "q1") == E + Q
    assert specialize(c1, "Q1") == WeylOp({0: q ** 2, 1: 1})
    assert specialize(WeylOp.scalar(1), "q1") == LaurentPoly.const(1)


@st.composite
def ops(draw, max_deg=2):
    coeffs = {}
    for j in range(draw(st.integers(0, max_deg)) + 1):
        c = draw(st.integers(-2, 2)) * Q ** draw(st.integers(0, 2)) * q ** draw(st.integers(-1, 2))
        c = c + draw(st.integers(-2, 2))
        coeffs[j] = c
    return WeylOp(coeffs)


nonzero_ops = ops().filter(lambda a: not a.is_zero())


@settings(max_examples=40, deadline=None)
@given(ops(), ops(), ops())
def test_associative_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(nonzero_ops, nonzero_ops)
def test_degree_law(a, b):
    assert weyl_mul(a, b).degree() == a.degree() + b.degree()


@settings(max_examples=20, deadline=None)
@given(ops(max_deg=1), ops(max_deg=1))
def test_apply_composes(a, b):
    f = QSequence(lambda n: q ** (n * n) + n, name="f")
    bf = f.apply(b)
    for n in range(4):
        assert weyl_apply(a * b, f, n) == weyl_apply(a, bf, n)


@settings(max_examples=40, deadline=None)
@given(nonzero_ops, nonzero_ops)
def test_right_division(a, b):
    quo, rem = right_divmod(a * b, b)
    assert rem.is_zero()
    assert quo == a


@st.composite
def bivariate(draw):
    terms = {}
    for _ in range(draw(st.integers(1, 4))):
        terms[(draw(st.integers(0, 3)), draw(st.integers(0, 3)))] = draw(st.integers(-3, 3))
    return LaurentPoly(terms, ("E", "Q"))


@settings(max_examples=40, deadline=None)
@given(bivariate())
def test_reverse_involution(p):
    if p.is_zero():
        return
    r = op_reverse(p)
    if "E" in p.vars:
        assert r.degree("E") <= p.degree("E") if "E" in r.vars else True
    if not p.evaluate({"E": 0}).is_zero():
        assert op_reverse(r) == p


def test_make_monic():
    a = WeylOp({0: Q, 1: 1 - Q})
    assert make_monic(a).is_monic()


def test_sequence_cache_threadsafe():
    calls = []
    f = QSequence(lambda n: calls.append(n) or q ** n)
    threads = [threading.Thread(target=lambda: f.values(range(20))) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert [f(n) for n in range(20)] == [RationalFunction(q ** n) for n in range(20)]
    assert f(3) is f(3)
