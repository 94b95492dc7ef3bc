import pytest

from qknot.acurve import (HS_X, L, M, PHI, a_candidate, a_candidate_raw, clasp_factor_check, degree_check,
                          heuristic_annihilators, hs_recursion_check, invert_phi, monomial_equiv,
                          phi_substitute, round_trip, specialization_chain)
from qknot.cpoly import cpoly_closed
from qknot.gcd import radical
from qknot.poly import LaurentPoly, parse
from qknot.qweyl import op_reverse
from qknot.ratfunc import RationalFunction


def test_phi_images():
    assert phi_substitute(parse("Q")) == RationalFunction(1 + L * M, L + M)
    assert phi_substitute(LaurentPoly.const(1)) == 1
    assert PHI.image_E == RationalFunction(L * (M ** 2 - 1) ** 2, M * (L + M) * (1 + L * M))


def test_phi_of_recursion_numerator():
    got = phi_substitute(parse("E*Q - E*Q^2 + 1 + Q^2"))
    assert got == RationalFunction(HS_X * (1 + L * M), M * (L + M) ** 3)
    printed = RationalFunction(HS_X * (1 + L * M), M * (L + M) ** 2)
    assert printed / got == RationalFunction(L + M)


def test_small_candidates():
    assert a_candidate(1).poly == L + M ** 3
    assert a_candidate(0).poly == 1
    expected = parse("L*(1 - M - 2*M^2 - M^3 + M^4) - M^2 - L^2*M^2")
    assert a_candidate(-1).poly in (expected, -expected)


@pytest.mark.parametrize("p", [p for p in range(-6, 7) if p])
def test_candidate_is_polynomial(p):
    assert a_candidate_raw(p).is_polynomial()


def test_hs_recursion_ranges():
    assert hs_recursion_check(3, 6)
    assert hs_recursion_check(-6, -3)
    assert hs_recursion_check(1, 6)
    assert hs_recursion_check(-6, -1)
    assert hs_recursion_check(4, 5)
    with pytest.raises(ValueError):
        hs_recursion_check(-2, 2)


def test_invert_phi_examples():
    assert monomial_equiv(invert_phi(a_candidate(1).poly), parse("1 + Q*E"))
    assert invert_phi(LaurentPoly.const(5)) == 5
    assert monomial_equiv(invert_phi(a_candidate(-1).poly), parse("1 - E"))
    with pytest.raises(ValueError):
        invert_phi(LaurentPoly.const(0))


def test_monomial_equiv_examples():
    f = parse("1 + Q*E")
    assert monomial_equiv(parse("Q^2") * f, f)
    assert not monomial_equiv(f, parse("1 + Q^2*E"))
    h = parse("3 + E + Q^3")
    assert monomial_equiv(parse("(Q - 1)^2 + Q*E") * h, h)
    with pytest.raises(ValueError):
        monomial_equiv(LaurentPoly.const(0), f)


@pytest.mark.parametrize("p", [p for p in range(-3, 4) if p])
def test_round_trip(p):
    assert round_trip(p)


def test_round_trip_radical_side():
    assert radical(op_reverse(cpoly_closed(1).poly)) == parse("1 + Q*E")


@pytest.mark.parametrize("p", [p for p in range(-10, 11) if p])
def test_structure(p):
    assert clasp_factor_check(p)
    assert degree_check(p)


def test_structure_rejects_zero():
    with pytest.raises(ValueError):
        clasp_factor_check(0)
    with pytest.raises(ValueError):
        degree_check(0)


def test_heuristic_annihilators():
    assert heuristic_annihilators(8, 8)


@pytest.mark.parametrize("p", range(-6, 7))
def test_specialization_chain(p):
    assert specialization_chain(p)
