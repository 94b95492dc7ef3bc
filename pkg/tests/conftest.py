from fractions import Fraction
import sys

import sympy as sp
from hypothesis import strategies as st

from qknot.poly import LaurentPoly

VARS = ("x", "y")


def to_sympy(p: LaurentPoly):
    syms = {v: sp.Symbol(v) for v in p.vars}
    out = sp.Integer(0)
    for e, c in p.terms.items():
        c = Fraction(c)
        term = sp.Rational(c.numerator, c.denominator)
        for v, k in zip(p.vars, e):
            term *= syms[v] ** k
        out += term
    return sp.expand(out)


def from_sympy(expr, vars_=VARS) -> LaurentPoly:
    expr = sp.expand(expr)
    if expr == 0:
        return LaurentPoly.const(0)
    syms = [sp.Symbol(v) for v in vars_]
    poly = sp.Poly(expr, *syms)
    terms = {}
    for mon, c in poly.terms():
        c = sp.Rational(c)
        terms[tuple(mon)] = Fraction(int(c.p), int(c.q))
    return LaurentPoly(terms, vars_)


@st.composite
def polys(draw, vars_=VARS, max_terms=4, max_exp=3, laurent=False):
    lo = -max_exp if laurent else 0
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(lo, max_exp)) for _ in vars_)
        terms[e] = draw(st.integers(-4, 4))
    return LaurentPoly(terms, vars_)


def nonzero_polys(**kw):
    return polys(**kw).filter(lambda p: not p.is_zero())


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in mod.TITLES.items():
        if n not in mod.RESULTS:
            continue
        ok, detail = mod.RESULTS[n]
        line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
