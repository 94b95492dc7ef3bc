"""Multivariate gcd, radical and resultants over the integers.

The gcd is the classical recursive scheme: pick a main variable, split off
the content (gcd of coefficients, computed recursively), and run the
subresultant PRS on the primitive parts.  All internal work happens on raw
``{exponent tuple: int}`` dicts over one fixed variable tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Dict, List, Tuple

from .poly import LaurentPoly, NotDivisibleError

Raw = Dict[Tuple[int, ...], int]


# -- raw integer polynomial helpers -----------------------------------------

def _add(a: Raw, b: Raw, sign: int = 1) -> Raw:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(a: Raw, b: Raw) -> Raw:
    if len(a) < len(b):
        a, b = b, a
    out: Raw = {}
    get = out.get
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _scale(a: Raw, c: int) -> Raw:
    return {e: v * c for e, v in a.items()} if c != 1 else a


def _pow(a: Raw, n: int, nv: int) -> Raw:
    out: Raw = {(0,) * nv: 1}
    base = a
    while n:
        if n & 1:
            out = _mul(out, base)
        n >>= 1
        if n:
            base = _mul(base, base)
    return out


def _is_const(a: Raw) -> bool:
    return len(a) == 1 and not any(next(iter(a)))


def _int_content(a: Raw) -> int:
    g = 0
    for c in a.values():
        g = igcd(g, c)
        if g == 1:
            break
    return g


def _divexact(f: Raw, g: Raw) -> Raw:
    """Exact division of integer polynomials (nonnegative exponents)."""
    if len(g) == 1:
        (eg, cg), = g.items()
        out = {}
        for e, c in f.items():
            d = tuple(x - y for x, y in zip(e, eg))
            if c % cg or any(x < 0 for x in d):
                raise NotDivisibleError("inexact monomial division")
            out[d] = c // cg
        return out
    lg = max(g)
    lc = g[lg]
    rest = [(e, c) for e, c in g.items() if e != lg]
    f = dict(f)
    quo: Raw = {}
    while f:
        e = max(f)
        c = f.pop(e)
        d = tuple(x - y for x, y in zip(e, lg))
        if c % lc or any(x < 0 for x in d):
            raise NotDivisibleError("inexact division")
        qc = c // lc
        quo[d] = qc
        for eg, cg in rest:
            ne = tuple(x + y for x, y in zip(d, eg))
            v = f.get(ne, 0) - qc * cg
            if v:
                f[ne] = v
            else:
                f.pop(ne, None)
    return quo


def _mins(a: Raw) -> Tuple[int, ...]:
    return tuple(min(col) for col in zip(*a))


def _shift(a: Raw, m) -> Raw:
    if not any(m):
        return a
    return {tuple(x - y for x, y in zip(e, m)): c for e, c in a.items()}


def _used(a: Raw) -> set:
    used = set()
    for e in a:
        for i, x in enumerate(e):
            if x:
                used.add(i)
    return used


def _split(a: Raw, i: int) -> Dict[int, Raw]:
    out: Dict[int, Raw] = {}
    for e, c in a.items():
        out.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
    return out


def _join(parts: Dict[int, Raw], i: int) -> Raw:
    out: Raw = {}
    for d, p in parts.items():
        for e, c in p.items():
            out[e[:i] + (d,) + e[i + 1:]] = c
    return out


def _normalize_sign(a: Raw) -> Raw:
    return {e: -c for e, c in a.items()} if a[max(a)] < 0 else a


# -- gcd ---------------------------------------------------------------------

def _gcd_raw(f: Raw, g: Raw, nv: int) -> Raw:
    """gcd of nonzero integer polynomials, leading coefficient positive."""
    mf, mg = _mins(f), _mins(g)
    m = tuple(min(x, y) for x, y in zip(mf, mg))
    f, g = _shift(f, mf), _shift(g, mg)
    h = _gcd_nomono(f, g, nv)
    return _normalize_sign(_shift(h, tuple(-x for x in m)))


def _content_in(parts: Dict[int, Raw], nv: int) -> Raw:
    it = iter(parts.values())
    c = next(it)
    c = _normalize_sign(c)
    for p in it:
        if _is_const(c):
            c = {next(iter(c)): igcd(next(iter(c.values())), _int_content(p))}
            continue
        c = _gcd_raw(c, p, nv)
    return c


def _gcd_nomono(f: Raw, g: Raw, nv: int) -> Raw:
    zero = (0,) * nv
    uf, ug = _used(f), _used(g)
    if not uf or not ug:
        return {zero: igcd(_int_content(f), _int_content(g))}
    if f == g:
        return _normalize_sign(f)
    only = (uf - ug) or (ug - uf)
    if only:
        i = min(only)
        if i in uf:
            return _gcd_raw(_content_in(_split(f, i), nv), g, nv)
        return _gcd_raw(f, _content_in(_split(g, i), nv), nv)
    # main variable: smallest degree bound keeps the PRS short
    best = None
    for i in uf:
        df = max(e[i] for e in f)
        dg = max(e[i] for e in g)
        key = (max(df, dg), min(df, dg))
        if best is None or key < best[0]:
            best = (key, i)
    i = best[1]
    pf, pg = _split(f, i), _split(g, i)
    cf, cg = _content_in(pf, nv), _content_in(pg, nv)
    c = _gcd_raw(cf, cg, nv)
    if not _is_const(cf) or next(iter(cf.values())) != 1:
        pf = {d: _divexact(p, cf) for d, p in pf.items()}
    if not _is_const(cg) or next(iter(cg.values())) != 1:
        pg = {d: _divexact(p, cg) for d, p in pg.items()}
    h = _prs_gcd(pf, pg, nv)
    return _mul(c, _join(h, i))


def _deg(a: Dict[int, Raw]) -> int:
    return max(a) if a else -1


def _prem(A: Dict[int, Raw], B: Dict[int, Raw], nv: int) -> Dict[int, Raw]:
    dA, dB = _deg(A), _deg(B)
    lB = B[dB]
    R = dict(A)
    e = dA - dB + 1
    while R and _deg(R) >= dB:
        dR = _deg(R)
        lR = R[dR]
        k = dR - dB
        new: Dict[int, Raw] = {}
        for d, p in R.items():
            if d == dR:
                continue
            new[d] = _mul(lB, p)
        for d, p in B.items():
            if d == dB:
                continue
            t = _mul(lR, p)
            new[d + k] = _add(new.get(d + k, {}), t, -1)
        R = {d: p for d, p in new.items() if p}
        e -= 1
    if e > 0 and R:
        f = _pow(lB, e, nv)
        R = {d: _mul(f, p) for d, p in R.items()}
    return R


def _primitive(A: Dict[int, Raw], nv: int) -> Dict[int, Raw]:
    c = _content_in(A, nv)
    if _is_const(c) and next(iter(c.values())) == 1:
        return A
    return {d: _divexact(p, c) for d, p in A.items()}


def _prs_gcd(A: Dict[int, Raw], B: Dict[int, Raw], nv: int) -> Dict[int, Raw]:
    """gcd of primitive polynomials over R[x] by the subresultant PRS."""
    one = {(0,) * nv: 1}
    if _deg(A) < _deg(B):
        A, B = B, A
    if _deg(B) == 0:
        return {0: one}
    # cheap exit when B | A
    g = one
    h = one
    while True:
        delta = _deg(A) - _deg(B)
        R = _prem(A, B, nv)
        if not R:
            return _primitive(B, nv)
        if _deg(R) == 0:
            return {0: one}
        div = _mul(g, _pow(h, delta, nv))
        A, B = B, {d: _divexact(p, div) for d, p in R.items()}
        g = A[_deg(A)]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _divexact(_pow(g, delta, nv), _pow(h, delta - 1, nv))


# -- public API ----------------------------------------------------------------

def _to_int_raw(p: LaurentPoly, vars_) -> Raw:
    c = p.content()
    t = p.extend(vars_)
    return {e: int(v / c) for e, v in t.items()}


def primitive_part(f: LaurentPoly) -> LaurentPoly:
    """Monomial-free, integer-primitive associate of f with positive leading coefficient."""
    if f.is_zero():
        return f
    _, p = f.split_monomial()
    raw = _to_int_raw(p, p.vars)
    return LaurentPoly._raw(p.vars, _normalize_sign(raw))


def gcd_poly(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in the Laurent ring over the rationals.

    Monomials and nonzero rationals are units there, so the result is
    normalized: no monomial factor, integer coprime coefficients, and a
    positive coefficient on the lex-largest term.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if f.is_zero():
        return primitive_part(g)
    if g.is_zero():
        return primitive_part(f)
    if f.is_monomial() or g.is_monomial():
        return LaurentPoly.const(1)
    vars_ = LaurentPoly.common_vars(f, g)
    _, pf = f.split_monomial()
    _, pg = g.split_monomial()
    rf = _to_int_raw(pf, vars_)
    rg = _to_int_raw(pg, vars_)
    rf, rg = _shift(rf, _mins(rf)), _shift(rg, _mins(rg))
    h = _gcd_raw(rf, rg, len(vars_))
    c = _int_content(h)
    if c != 1:
        h = {e: v // c for e, v in h.items()}
    return LaurentPoly._raw(vars_, h)


def radical(f: LaurentPoly) -> LaurentPoly:
    """Square-free part: each irreducible factor to the power sign(multiplicity).

    Monomial factors x**a become x**sign(a); the rest is f / gcd(f, all partials),
    content-normalized.  rad of a nonzero constant is 1.
    """
    if f.is_zero():
        raise ValueError("radical of the zero polynomial")
    m, p = f.split_monomial()
    mono = LaurentPoly.monomial({v: (x > 0) - (x < 0) for v, x in zip(f.vars, m)})
    p = primitive_part(p)
    if p.is_constant():
        return mono
    g = p
    for v in p.vars:
        dv = p.derivative(v)
        if not dv.is_zero():
            g = gcd_poly(g, dv)
            if g.is_constant():
                break
    return primitive_part(p.divexact(g)) * mono


def resultant(f: LaurentPoly, g: LaurentPoly, var: str) -> LaurentPoly:
    """Resultant with respect to ``var`` as the Sylvester determinant.

    Convention: Res(f, g) = det Syl(f, g) with the deg_g shifted rows of f
    first, so Res(f, g) = lc(f)**deg(g) * prod g(roots of f); in particular
    Res_x(x - a, x - b) = a - b.  Negative powers of ``var`` are cleared
    first (multiplying by a power of ``var``); other variables may carry
    negative exponents.
    """
    from .linalg import bareiss_det

    if f.is_zero() or g.is_zero():
        return LaurentPoly.const(0)
    f = _clear_var(f, var)
    g = _clear_var(g, var)
    m, n = f.degree(var), g.degree(var)
    if m == 0 and n == 0:
        raise ValueError(f"both arguments are constant in {var}")
    if m == 0:
        return f.coefficients_in(var).get(0) ** n
    if n == 0:
        return g.coefficients_in(var).get(0) ** m
    if n == 2 and m >= 2:
        return _resultant_quadratic(f, g, var)
    fc = f.coefficients_in(var)
    gc = g.coefficients_in(var)
    zero = LaurentPoly.const(0)
    size = m + n
    rows: List[List[LaurentPoly]] = []
    for r in range(n):
        rows.append([fc.get(m - (c - r), zero) if 0 <= c - r <= m else zero for c in range(size)])
    for r in range(m):
        rows.append([gc.get(n - (c - r), zero) if 0 <= c - r <= n else zero for c in range(size)])
    return bareiss_det(rows)


def _resultant_quadratic(f: LaurentPoly, g: LaurentPoly, var: str) -> LaurentPoly:
    """Res(f, g) for g = c2 x^2 + c1 x + c0.

    Res(f, g) = c2^m f(x1) f(x2) over the roots of g.  Pseudo-division
    gives c2^k f = s g + a x + b, hence
    Res = c2^{m-2k-1} (a^2 c0 - a b c1 + b^2 c2).
    """
    m = f.degree(var)
    gc = g.coefficients_in(var)
    zero = LaurentPoly.const(0)
    c0, c1, c2 = (gc.get(i, zero) for i in range(3))
    x = LaurentPoly.var(var)
    r, k = f, 0
    while not r.is_zero() and r.degree(var) >= 2:
        d = r.degree(var)
        lead = r.coefficients_in(var)[d]
        r = r * c2 - lead * x ** (d - 2) * g
        k += 1
    rc = r.coefficients_in(var) if not r.is_zero() else {}
    a, b = rc.get(1, zero), rc.get(0, zero)
    core = a * a * c0 - a * b * c1 + b * b * c2
    e = m - 2 * k - 1
    return core * c2 ** e if e >= 0 else core.divexact(c2 ** (-e))


def _clear_var(f: LaurentPoly, var: str) -> LaurentPoly:
    lo = f.min_degree(var)
    return f.mul_monomial({var: -lo}) if lo < 0 else f


def divides(g: LaurentPoly, f: LaurentPoly) -> bool:
    return g.divides(f)



