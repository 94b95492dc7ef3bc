import pytest

from qknot.appendix import (TableMismatch, appendix_table, coefficient_table, compare_table,
                            latex_table, reference_table, strip_ws)
from qknot.cpoly import (alexander_specialization, backward_form, backward_recursion_holds,
                         backward_recursion_residual, cpoly_closed, cpoly_recursive, nc_backward_coeffs,
                         nc_cpoly, q1_sequence_residual, summand_recursion_residual, summand_sum_check)
from qknot.cyclotomic import twist_sequence
from qknot.poly import LaurentPoly, poly
from qknot.qweyl import WeylOp, op_reverse, specialize, weyl_apply
from qknot.ratfunc import RationalFunction

E, Q, q = (LaurentPoly.var(v) for v in "EQq")


def test_nc_examples():
    assert nc_cpoly(1).op == WeylOp({0: q ** 2 * Q, 1: 1})
    assert nc_cpoly(-1).op == WeylOp({0: -1, 1: 1})
    assert nc_cpoly(2).op.coefficient(0) == RationalFunction(q ** 6 * Q ** 2 - q ** 7 * Q ** 3)


def test_closed_examples():
    assert cpoly_closed(1).poly == Q + E
    assert cpoly_closed(-1).poly == E - 1
    assert cpoly_closed(2).poly == E ** 2 + Q * (2 - Q + Q ** 2) * E + Q ** 2 * (1 - Q)


def test_recursive_examples():
    x = Q - Q ** 2 + E + Q ** 2 * E
    assert cpoly_recursive(2).poly == x * (Q + E) - Q ** 2 * E ** 2
    assert cpoly_recursive(-2).poly == x * Q ** -2 * (E - 1) - E ** 2 * Q ** -2
    assert cpoly_recursive(0).poly == LaurentPoly.const(1)


@pytest.mark.parametrize("p", range(-10, 11))
def test_closed_equals_recursive(p):
    assert cpoly_closed(p).poly == cpoly_recursive(p).poly


@pytest.mark.parametrize("p", range(-6, 7))
def test_q1_consistency_and_monic(p):
    nc = nc_cpoly(p)
    assert nc.op.is_monic() and nc.op.degree() == abs(p)
    assert specialize(nc.op, "q1") == cpoly_closed(p).poly


@pytest.mark.parametrize("p", range(-6, 7))
def test_q_powers(p):
    c = cpoly_closed(p).poly
    if p >= 0:
        assert c.is_polynomial()
    else:
        # negative Q-powers occur for p < 0, down to Q^(2 - 2|p|)
        assert c.min_degree("Q") == 2 - 2 * abs(p)


def test_backward_examples():
    assert backward_form(1) == 1 + Q * E
    assert backward_form(0) == LaurentPoly.const(1)
    b = Q * E - Q ** 2 * (E - 1) + 1
    assert backward_form(2) == b * (1 + Q * E) - Q ** 2


@pytest.mark.parametrize("p", range(-6, 11))
def test_backward_recursion(p):
    assert backward_recursion_holds(p)


def test_backward_coeffs():
    assert nc_backward_coeffs(1, 1) == RationalFunction(q * Q)
    for p in (-3, -2, -1, 1, 2, 3):
        for n in range(abs(p), 11):
            assert backward_recursion_residual(p, n).is_zero()


@pytest.mark.parametrize("p", range(-10, 11))
def test_alexander_specialization(p):
    assert alexander_specialization(p)


@pytest.mark.parametrize("p", [p for p in range(-5, 6) if p])
def test_q1_sequence_law(p):
    for n in range(8):
        assert q1_sequence_residual(p, n) == 0


@pytest.mark.parametrize("p", range(2, 6))
def test_summand_identities(p):
    for l in (1, 2):
        for i in range(0, p + 2):
            for j in range(0, p + 2):
                assert summand_recursion_residual(p, l, i, j).is_zero(), (l, i, j)
    assert summand_sum_check(p)


@pytest.mark.parametrize("p", [-4, -2, 0, 1, 3])
def test_annihilation_small(p):
    op, seq = nc_cpoly(p).op, twist_sequence(p)
    for n in range(1, 9):
        assert weyl_apply(op, seq, n).is_zero()


def test_appendix_examples():
    t1 = appendix_table(1)
    assert t1 == {(0, 1): q ** 2, (1, 0): LaurentPoly.const(1)}
    tm2 = appendix_table(-2)
    assert [tm2.get((1, j)) for j in (-2, -1, 0)] == [-q ** -4, q ** -2, -q ** -1 - 1]
    t3 = appendix_table(3)
    assert t3[(2, 1)] == q ** 4 + q ** 5 + q ** 6
    assert appendix_table(2)[(1, 1)] == q ** 3 + q ** 4


@pytest.mark.parametrize("p", [-3, -2, -1, 1, 2, 3])
def test_reference_tables(p):
    compare_table(p)
    assert reference_table(p) == coefficient_table(p)


def test_mismatch_reported(monkeypatch):
    import qknot.appendix as ap
    bad = dict(coefficient_table(2))
    bad[(1, 2)] = q
    monkeypatch.setattr(ap, "coefficient_table", lambda p: bad)
    with pytest.raises(TableMismatch, match="E\\^1 Q\\^2"):
        ap.compare_table(2)


def test_latex_layout():
    body = latex_table(2)
    assert "q^3+q^4" in body and "-q^5" in body
    assert strip_ws(latex_table(2)) == strip_ws(body)
