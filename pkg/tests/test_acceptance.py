"""The eleven acceptance criteria at zero tolerance.

Each criterion records PASS or FAIL in RESULTS; conftest prints one line
per criterion at the end of the run.  Known-unattainable parts are strict
xfails, so the criterion line reads FAIL while the suite stays green.
"""

import time

import pytest

from qknot.acurve import (a_candidate, clasp_factor_check, degree_check, heuristic_annihilators,
                          hs_recursion_check, invert_phi, monomial_equiv, specialization_chain)
from qknot.appendix import REFERENCE_ORDER, TableMismatch, compare_table
from qknot.cpoly import (alexander_specialization, backward_recursion_holds, cpoly_closed, cpoly_recursive,
                         nc_cpoly, summand_sum_check)
from qknot.cyclotomic import eval_q1, genfun_check, twist_sequence
from qknot.gcd import radical
from qknot.poly import parse
from qknot.qweyl import op_reverse, specialize, weyl_apply
from qknot.telescope import celine_rediscovery, kfree_identity_holds, paper_apparatus, twist_term

RESULTS = {}
TITLES = {
    1: "appendix reproduction",
    2: "annihilation |p|<=4, n<=12",
    3: "closed form = recursion",
    4: "q=1 consistency",
    5: "Alexander specialization",
    6: "phi bridge",
    7: "certificates",
    8: "solver rediscovery",
    9: "q=1 sequence law",
    10: "inversion round trip",
    11: "structure checks",
}


def record(n, ok, detail=""):
    prev = RESULTS.get(n, (True, ""))
    RESULTS[n] = (prev[0] and ok, "; ".join(x for x in (prev[1], "" if ok else detail) if x))


def span(m):
    return range(-m, m + 1)


def nonzero(m):
    return [p for p in span(m) if p]


def test_c01_appendix():
    t0 = time.perf_counter()
    bad = []
    for p in REFERENCE_ORDER:
        try:
            compare_table(p)
        except TableMismatch as exc:
            bad.append(str(exc))
    record(1, not bad, "; ".join(bad))
    assert not bad
    assert nc_cpoly(2).op.coefficient(1).as_poly() == parse("(q^3 + q^4)*Q - q^5*Q^2 + q^7*Q^3")
    assert time.perf_counter() - t0 < 5


def annihilation_cells():
    for p in span(4):
        for n in range(13):
            yield p, n


def test_c02_annihilation():
    bad = []
    for p, n in annihilation_cells():
        if (p, n) == (0, 0):
            continue
        if not weyl_apply(nc_cpoly(p).op, twist_sequence(p), n).is_zero():
            bad.append((p, n))
    record(2, not bad, f"nonzero cells {bad}")
    assert not bad


@pytest.mark.xfail(strict=True, reason="C_0 = 1 and J^_0(0) = 1")
def test_c02_annihilation_p0_n0():
    ok = weyl_apply(nc_cpoly(0).op, twist_sequence(0), 0).is_zero()
    record(2, ok, "p=0, n=0 gives 1")
    assert ok


def test_c03_recursion():
    t0 = time.perf_counter()
    ok = all(cpoly_closed(p).poly == cpoly_recursive(p).poly for p in span(10))
    ok = ok and all(backward_recursion_holds(p) for p in range(1, 11))
    ok = ok and all(summand_sum_check(p) for p in range(1, 6))
    record(3, ok, "closed form or backward shift")
    assert ok
    assert time.perf_counter() - t0 < 10


def test_c04_q1_consistency():
    ok = all(specialize(nc_cpoly(p).op, "q1") == cpoly_closed(p).poly for p in span(6))
    record(4, ok, "specialize(nc_cpoly, q=1)")
    assert ok


def test_c05_alexander():
    ok = all(alexander_specialization(p) for p in span(10))
    ok = ok and all(specialization_chain(p) for p in span(6))
    record(5, ok, "specialization")
    assert ok


def test_c06_phi_bridge():
    t0 = time.perf_counter()
    ok = all(a_candidate(p).poly.is_polynomial() for p in nonzero(6))
    ok = ok and hs_recursion_check(1, 6) and hs_recursion_check(-6, -1)
    ok = ok and monomial_equiv(a_candidate(1).poly, parse("L + M^3"), ())
    record(6, ok, "phi bridge")
    assert ok
    assert time.perf_counter() - t0 < 30


def test_c07_certificates():
    t0 = time.perf_counter()
    failed = []
    for p in (1, 2, -1, -2):
        rep = paper_apparatus(p)
        failed += [f"p={p} {name}" for name in rep.failed]
    record(7, not failed, ", ".join(failed))
    assert not failed
    assert {"cert_boundary", "cert_identity"} <= set(paper_apparatus(2).checks)
    assert time.perf_counter() - t0 < 30


@pytest.fixture(scope="module")
def rediscoveries():
    t0 = time.perf_counter()
    found = {p: celine_rediscovery(p) for p in (1, 2)}
    return found, time.perf_counter() - t0


def test_c08_solver_soundness(rediscoveries):
    found, elapsed = rediscoveries
    ok = True
    for p, r in found.items():
        ok = ok and bool(r.solution) and kfree_identity_holds(twist_term(p), r.solution.a) and r.left_multiple
    record(8, ok, "solver output not certified")
    assert ok
    assert elapsed < 120


@pytest.mark.xfail(strict=True, reason="the minimal Celine operator is a proper left multiple of C_p")
@pytest.mark.parametrize("p", [1, 2])
def test_c08_equals_cpoly_up_to_unit(rediscoveries, p):
    r = rediscoveries[0][p]
    record(8, r.equal_up_to_unit, f"p={p}: minimal operator has order {r.solution.operator().degree()}")
    assert r.equal_up_to_unit


def test_c09_q1_sequence_law():
    ok = all(eval_q1(p, n) == (-p) ** n for p in span(5) for n in range(11))
    ok = ok and all(genfun_check(p, 8) for p in span(5))
    record(9, ok, "q=1 sequence law")
    assert ok


def test_c10_round_trip():
    ok = all(monomial_equiv(invert_phi(a_candidate(p).poly), radical(op_reverse(cpoly_closed(p).poly)))
             for p in nonzero(3))
    record(10, ok, "round trip")
    assert ok


def test_c11_structure():
    ok = all(clasp_factor_check(p) and degree_check(p) for p in nonzero(10))
    ok = ok and heuristic_annihilators(8, 8)
    record(11, ok, "structure")
    assert ok
