"""Fraction-free elimination over Laurent polynomial rings.

Every division below is exact (the intermediate entries are minors of the
input), so no rational functions ever appear.
"""

from __future__ import annotations

from typing import List, Sequence

from fractions import Fraction
from math import gcd, lcm

from .gcd import gcd_poly, primitive_part
from .poly import LaurentPoly

Matrix = List[List[LaurentPoly]]

ZERO = LaurentPoly.const(0)
ONE = LaurentPoly.const(1)


def _copy(rows: Sequence[Sequence]) -> Matrix:
    return [[LaurentPoly.coerce(x) for x in row] for row in rows]


def bareiss_det(rows: Sequence[Sequence]) -> LaurentPoly:
    """Determinant of a square matrix by Bareiss elimination."""
    a = _copy(rows)
    n = len(a)
    if n == 0:
        return ONE
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                v = row_i[j] * piv
                if not aik.is_zero() and not row_k[j].is_zero():
                    v = v - aik * row_k[j]
                row_i[j] = v.divexact(prev) if prev != ONE else v
            row_i[k] = ZERO
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def rref_fraction_free(rows: Sequence[Sequence]):
    """Fraction-free Gauss-Jordan reduction.

    Returns ``(matrix, pivot_columns, d)`` where every pivot entry equals the
    common value ``d`` and pivot columns are zero outside their pivot row.
    """
    a = _copy(rows)
    m = len(a)
    n = len(a[0]) if a else 0
    prev = ONE
    r = 0
    pivots: List[int] = []
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if not a[i][c].is_zero()), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        row_r = a[r]
        for i in range(m):
            if i == r:
                continue
            row_i = a[i]
            aic = row_i[c]
            new = []
            for j in range(n):
                v = row_i[j] * piv
                if not aic.is_zero() and not row_r[j].is_zero():
                    v = v - aic * row_r[j]
                new.append(v.divexact(prev) if prev != ONE and not v.is_zero() else v)
            a[i] = new
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots, prev


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> List[List[LaurentPoly]]:
    """Basis of the right kernel with polynomial, content-free entries."""
    if not rows:
        if ncols is None:
            raise ValueError("empty matrix needs ncols")
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    a, pivots, d = rref_fraction_free(rows)
    n = len(a[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [ZERO] * n
        vec[f] = d
        for i, pc in enumerate(pivots):
            vec[pc] = -a[i][f]
        basis.append(primitive_vector(vec))
    return basis


def primitive_vector(vec: Sequence[LaurentPoly]) -> List[LaurentPoly]:
    """Divide out the gcd of the entries, common monomials and rational content."""
    nz = [v for v in vec if not v.is_zero()]
    if not nz:
        return list(vec)
    g = nz[0]
    for v in nz[1:]:
        g = gcd_poly(g, v)
        if g.is_constant():
            break
    g = primitive_part(g)
    names = LaurentPoly.common_vars(*nz)
    shift = {}
    for name in names:
        shift[name] = -min(v.min_degree(name) for v in nz)
    unit = LaurentPoly.monomial(shift)
    out = [v.divexact(g) * unit if not v.is_zero() else v for v in vec]
    num, den = 0, 1
    for w in out:
        for c in w.terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
    scale = Fraction(den, num)
    lead = next(w for w in out if not w.is_zero()).leading_coefficient()
    if lead < 0:
        scale = -scale
    return [w.scale(scale) for w in out]
