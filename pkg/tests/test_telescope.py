import pytest

from qknot.cpoly import nc_cpoly
from qknot.cyclotomic import cyclotomic_summand, twist_sequence
from qknot.poly import LaurentPoly
from qknot.qweyl import QSequence, WeylOp, right_divmod, weyl_apply
from qknot.ratfunc import RationalFunction
from qknot.telescope import (Certificate, NotFound, binomial_term, celine_solve, cert_boundary_vanishes,
                             explicit_sum, kfree_identity_holds, minimal_order, paper_apparatus,
                             r_recursion_holds, same_up_to_unit, shift_ratio, t_vanishes_beyond,
                             telescoped_operator, telescoping_residuals, twist_certificate,
                             twist_certificate_function, twist_term, verify_certificate, verify_kfree)

Q, q, K = (LaurentPoly.var(v) for v in "QqK")


@pytest.mark.parametrize("p", range(-3, 4))
def test_twist_term_values(p):
    t = twist_term(p)
    assert t.compatible()
    for n in range(4):
        for k in range(n + 1):
            assert t.value(n, k) == cyclotomic_summand(p, n, k)


def test_shift_ratio_examples():
    t = twist_term(1)
    assert shift_ratio(t, 0, 0) == RationalFunction(1)
    assert shift_ratio(t, 1, 0) == t.ratio_n
    other = t.ratio_k * t.ratio_n.shift("K", "q", 1)
    assert shift_ratio(t, 1, 1) == other
    assert binomial_term().compatible()


def test_verify_kfree_trivial():
    t = twist_term(2)
    assert verify_kfree(t, {0: 0, 1: 0})
    assert not verify_kfree(t, {0: 1})


def test_verify_certificate():
    t = twist_term(1)
    assert verify_certificate(t, Certificate({}, RationalFunction(0)))
    for p in (1, 2):
        assert verify_certificate(twist_term(p), twist_certificate(p))
    wrong = twist_certificate(1)
    assert not verify_certificate(twist_term(1), Certificate(wrong.coeffs, wrong.cert * 2))


@pytest.mark.parametrize("method", ["modular", "bareiss"])
def test_celine_binomial(method):
    t = binomial_term()
    sol = celine_solve(t, 1, 1, method)
    op = sol.operator()
    assert same_up_to_unit(op, WeylOp({0: Q - 1, 1: 1}))
    assert kfree_identity_holds(t, sol.a)
    # summing the binomial-theorem summand gives delta_{n,0}
    S = QSequence(lambda n: explicit_sum(t, n, range(n + 1)))
    assert [S(n) for n in range(4)] == [RationalFunction(1)] + [RationalFunction(0)] * 3
    for n in range(9):
        assert weyl_apply(op, S, n).is_zero()


def test_celine_not_found():
    assert isinstance(celine_solve(binomial_term(), 0, 3), NotFound)
    for p, (I, J) in ((1, (1, 1)), (1, (2, 2)), (2, (2, 2)), (2, (4, 2))):
        assert not celine_solve(twist_term(p), I, J)


@pytest.mark.parametrize("p", [1, -1])
def test_celine_twist_minimal(p):
    t = twist_term(p)
    sol = minimal_order(t, 3, 2)
    assert (sol.I, sol.J) == (3, 2)
    op = sol.operator()
    assert op.degree() == 3
    assert kfree_identity_holds(t, sol.a)
    _, rem = right_divmod(op, nc_cpoly(p).op)
    assert rem.is_zero()
    assert not same_up_to_unit(op, nc_cpoly(p).op)
    seq = twist_sequence(p)
    res = telescoping_residuals(t, op, lambda n: range(n + 1), n_max=10)
    assert all(r.is_zero() for r in res)
    assert all(weyl_apply(op, seq, n).is_zero() for n in range(6))


def test_telescoped_operator_examples():
    assert telescoped_operator(None, [q ** 2 * Q, 1]) == WeylOp({0: q ** 2 * Q, 1: 1})
    R = RationalFunction(1 - Q)
    got = telescoped_operator(None, [1], boundary=R)
    assert got == WeylOp({1: RationalFunction(1, 1 - q * Q), 0: RationalFunction(-1, 1 - Q)})
    with pytest.raises(ZeroDivisionError):
        telescoped_operator(None, [1], boundary=RationalFunction(0))


def test_homogenization_kills_inhomogeneous():
    # (E - 1) S = (q - 1) Q for S(n) = q^n + 1
    S = QSequence(lambda n: q ** n + 1)
    op = telescoped_operator(None, [-1, 1], boundary=RationalFunction((q - 1) * Q))
    for n in range(8):
        assert weyl_apply(op, S, n).is_zero()


@pytest.mark.parametrize("p", [1, -1, 2, -2])
def test_paper_apparatus(p):
    rep = paper_apparatus(p)
    assert rep.ok, rep.failed
    # the printed t^(2) coefficient and the printed sign fail; recorded as notes
    assert not any(rep.notes.values())


def test_apparatus_details():
    assert t_vanishes_beyond(3, 1) and t_vanishes_beyond(3, 2)
    assert r_recursion_holds(3) and not r_recursion_holds(3, printed_sign=True)
    with pytest.raises(ValueError):
        paper_apparatus(0)


def test_certificate_boundary():
    for p in (1, 2, 3):
        cert = twist_certificate_function(p)
        assert cert.monomial_subs({"K": {"q": -1}}).is_zero()
        assert cert_boundary_vanishes(p)
