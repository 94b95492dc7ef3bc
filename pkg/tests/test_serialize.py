import json
from fractions import Fraction

from hypothesis import given

from qknot.cpoly import nc_cpoly
from qknot.poly import LaurentPoly, parse
from qknot.ratfunc import RationalFunction
from qknot.serialize import (dumps, op_from_obj, op_to_obj, poly_from_obj, poly_to_obj, ratfunc_from_obj,
                             ratfunc_to_obj, to_obj)

from conftest import nonzero_polys, polys


def test_poly_format():
    obj = poly_to_obj(LaurentPoly({(1, 0, 2): Fraction(3, 2), (0, -1, 0): -1}, ("E", "Q", "q")))
    assert obj == {"vars": ["E", "Q", "q"],
                   "terms": [{"exp": [0, -1, 0], "coef": "-1"}, {"exp": [1, 0, 2], "coef": "3/2"}]}


def test_zero_and_constant():
    assert poly_from_obj(poly_to_obj(LaurentPoly.const(0))) == 0
    assert poly_from_obj(poly_to_obj(LaurentPoly.const(7))) == 7


@given(polys(laurent=True))
def test_poly_round_trip(p):
    assert poly_from_obj(json.loads(json.dumps(poly_to_obj(p)))) == p


@given(polys(laurent=True), polys(laurent=True))
def test_equal_values_equal_bytes(a, b):
    assert dumps(a + b) == dumps(b + a)


@given(polys(), nonzero_polys())
def test_ratfunc_round_trip(a, b):
    r = RationalFunction(a, b)
    assert ratfunc_from_obj(ratfunc_to_obj(r)) == r


def test_ratfunc_accepts_plain_poly():
    assert ratfunc_from_obj(poly_to_obj(parse("x + 1"))) == RationalFunction(parse("x + 1"))


def test_op_round_trip():
    for p in (-2, 1, 3):
        op = nc_cpoly(p).op
        assert op_from_obj(op_to_obj(op)) == op
        assert to_obj(op) == op_to_obj(op)


def test_to_obj_polynomial_ratfunc():
    assert to_obj(RationalFunction(parse("x^2 - 1"), parse("x - 1"))) == poly_to_obj(parse("x + 1"))
