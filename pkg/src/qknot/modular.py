"""Kernels of polynomial matrices by evaluation, interpolation and rational reconstruction.

The matrix entries are Laurent polynomials in two variables x (inner) and
y (outer).  At a point (y0, x0) mod a prime the reduced row echelon form
gives a canonical kernel basis; each entry is a rational function of
(x, y), recovered first in x for fixed y0 and then, after normalizing the
x-denominator to be monic, coefficient-wise in y.  Results are unverified
guesses: callers must certify them exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import LaurentPoly

PRIME = (1 << 61) - 1

Poly = List[int]  # dense, low degree first, over GF(PRIME)


class ReconstructionError(ArithmeticError):
    """The sampled values did not determine a rational function."""


# -- dense univariate arithmetic over GF(p) ---------------------------------------

def _trim(a: Poly) -> Poly:
    while a and a[-1] == 0:
        a.pop()
    return a


def p_add(a: Poly, b: Poly) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % PRIME
    return _trim(out)


def p_sub(a: Poly, b: Poly) -> Poly:
    return p_add(a, [(-x) % PRIME for x in b])


def p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % PRIME
    return _trim(out)


def p_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], PRIME - 2, PRIME)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % PRIME
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[i + d] = (a[i + d] - c * y) % PRIME
        _trim(a)
    return _trim(q), a


def p_eval(a: Poly, x: int) -> int:
    out = 0
    for c in reversed(a):
        out = (out * x + c) % PRIME
    return out


def p_monic(a: Poly) -> Poly:
    inv = pow(a[-1], PRIME - 2, PRIME)
    return [c * inv % PRIME for c in a]


def p_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, p_divmod(a, b)[1]
    return p_monic(a) if a else a


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> Poly:
    """Newton interpolation."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = (coef[i] - coef[i - 1]) % PRIME
            den = (xs[i] - xs[i - j]) % PRIME
            coef[i] = num * pow(den, PRIME - 2, PRIME) % PRIME
    out: Poly = []
    for i in range(n - 1, -1, -1):
        out = p_mul(out, [(-xs[i]) % PRIME, 1]) if out else []
        out = p_add(out, [coef[i]])
    return out


def rational_reconstruct(xs: Sequence[int], ys: Sequence[int]) -> Tuple[Poly, Poly]:
    """Maximal-quotient rational reconstruction: (num, den) with den monic."""
    m: Poly = [1]
    for x in xs:
        m = p_mul(m, [(-x) % PRIME, 1])
    u = interpolate(xs, ys)
    r0, r1 = m, u
    t0, t1 = [], [1]
    best = None
    best_deg = 0
    while r1:
        q, r = p_divmod(r0, r1)
        if len(q) - 1 > best_deg and t1:
            best_deg = len(q) - 1
            best = (r1, t1)
        r0, r1 = r1, r
        t0, t1 = t1, p_sub(t0, p_mul(q, t1))
    if best is None:
        if not u:
            return [], [1]
        raise ReconstructionError("no rational function fits the samples")
    num, den = best
    g = p_gcd(num, den) if num else p_monic(den)
    if len(g) > 1:
        num = p_divmod(num, g)[0]
        den = p_divmod(den, g)[0]
    inv = pow(den[-1], PRIME - 2, PRIME)
    return [c * inv % PRIME for c in num], [c * inv % PRIME for c in den]


def rational_number(a: int) -> Fraction:
    """The fraction n/d with |n|, |d| < sqrt(p/2) congruent to a."""
    a %= PRIME
    bound = int((PRIME // 2) ** 0.5)
    r0, r1, s0, s1 = PRIME, a, 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        raise ReconstructionError(f"{a} has no small rational preimage")
    return Fraction(r1, s1)


# -- evaluation of polynomial matrices --------------------------------------------

class CompiledMatrix:
    """Entries stored as (x-exponent, y-exponent, coefficient) triples for fast evaluation."""

    def __init__(self, rows: Sequence[Sequence[LaurentPoly]], x: str, y: str):
        self.shape = (len(rows), len(rows[0]) if rows else 0)
        self.entries: List[List[List[Tuple[int, int, int]]]] = []
        for row in rows:
            out_row = []
            for e in row:
                terms = []
                ix = e.vars.index(x) if x in e.vars else None
                iy = e.vars.index(y) if y in e.vars else None
                extra = [v for v in e.vars if v not in (x, y)]
                if extra:
                    raise ValueError(f"unexpected variables {extra}")
                for exp, c in e.terms.items():
                    c = Fraction(c)
                    cm = c.numerator * pow(c.denominator, PRIME - 2, PRIME) % PRIME
                    terms.append((exp[ix] if ix is not None else 0, exp[iy] if iy is not None else 0, cm))
                out_row.append(terms)
            self.entries.append(out_row)

    def at(self, x0: int, y0: int) -> List[List[int]]:
        cache_x: Dict[int, int] = {}
        cache_y: Dict[int, int] = {}

        def pw(cache, base, e):
            v = cache.get(e)
            if v is None:
                v = pow(base, e % (PRIME - 1), PRIME)
                cache[e] = v
            return v

        out = []
        for row in self.entries:
            vals = []
            for terms in row:
                s = 0
                for ex, ey, c in terms:
                    s += c * pw(cache_x, x0, ex) * pw(cache_y, y0, ey)
                vals.append(s % PRIME)
            out.append(vals)
        return out


def rref_mod(rows: List[List[int]]) -> Tuple[List[List[int]], List[int]]:
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], PRIME - 2, PRIME)
        rows[rank] = [v * inv % PRIME for v in rows[rank]]
        prow = rows[rank]
        for r in range(len(rows)):
            f = rows[r][col]
            if r != rank and f:
                rows[r] = [(a - f * b) % PRIME for a, b in zip(rows[r], prow)]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def kernel_mod(rows: List[List[int]], ncols: int) -> Tuple[List[int], List[List[int]]]:
    """Free columns and the canonical kernel basis (v_f = 1 on its own free column)."""
    red, pivots = rref_mod(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-red[i][f]) % PRIME
        basis.append(v)
    return free, basis


def generic_nullity(mat: CompiledMatrix, rng: random.Random, tries: int = 2) -> Tuple[int, List[int]]:
    """Smallest kernel dimension over a few random points (a point can only overestimate it)."""
    best = None
    for _ in range(tries):
        vals = mat.at(rng.randrange(2, PRIME - 1), rng.randrange(2, PRIME - 1))
        free, _ = kernel_mod(vals, mat.shape[1])
        if best is None or len(free) < len(best):
            best = free
    return len(best), best


# -- two-stage reconstruction ----------------------------------------------------------

def _stage_x(mat: CompiledMatrix, y0: int, free: List[int], rng: random.Random, start: int):
    """For fixed y0: kernel vectors as polynomials in x over a monic common denominator."""
    n = start
    while True:
        xs = [rng.randrange(2, PRIME - 1) for _ in range(n + 2)]
        samples = []
        for x0 in xs:
            f2, basis = kernel_mod(mat.at(x0, y0), mat.shape[1])
            if f2 != free:
                raise ReconstructionError("unlucky evaluation point")
            samples.append(basis)
        try:
            out = []
            for b in range(len(free)):
                fracs = []
                for c in range(mat.shape[1]):
                    ys = [s[b][c] for s in samples[:n]]
                    fracs.append(rational_reconstruct(xs[:n], ys))
                den = [1]
                for _, d in fracs:
                    den = p_divmod(p_mul(den, d), p_gcd(den, d))[0]
                den = p_monic(den)
                nums = [p_divmod(p_mul(nm, den), d)[0] for nm, d in fracs]
                for k in (n, n + 1):
                    dv = p_eval(den, xs[k])
                    for c in range(mat.shape[1]):
                        if p_eval(nums[c], xs[k]) != samples[k][b][c] * dv % PRIME:
                            raise ReconstructionError("check point failed")
                out.append(nums)
            return out, n
        except ReconstructionError:
            n *= 2
            if n > 512:
                raise


def reconstruct_kernel(mat: CompiledMatrix, x: str, y: str, seed: int = 12345) -> List[List[LaurentPoly]]:
    """Polynomial kernel basis of a matrix over Q[x^+-1, y^+-1], reconstructed mod p."""
    rng = random.Random(seed)
    nullity, free = generic_nullity(mat, rng)
    if nullity == 0:
        return []
    n_x = 8
    n_y = 8
    while True:
        ys = [rng.randrange(2, PRIME - 1) for _ in range(n_y + 2)]
        stage = []
        for y0 in ys:
            vecs, n_x = _stage_x(mat, y0, free, rng, n_x)
            stage.append(vecs)
        try:
            return _stage_y(stage, ys, n_y, x, y, mat.shape[1], len(free))
        except ReconstructionError:
            n_y *= 2
            if n_y > 1024:
                raise


def _stage_y(stage, ys, n, x: str, y: str, ncols: int, nvec: int) -> List[List[LaurentPoly]]:
    basis = []
    for b in range(nvec):
        degs = {len(s[b][c]) for s in stage for c in range(ncols)}
        # coefficient (c, e) of x^e in column c, as a function of y
        fits = {}
        for c in range(ncols):
            width = max(len(s[b][c]) for s in stage)
            for e in range(width):
                vals = [(s[b][c][e] if e < len(s[b][c]) else 0) for s in stage]
                fits[(c, e)] = (rational_reconstruct(ys[:n], vals[:n]), vals)
        den = [1]
        for (nm, d), _ in fits.values():
            den = p_divmod(p_mul(den, d), p_gcd(den, d))[0]
        for key, ((nm, d), vals) in fits.items():
            full = p_divmod(p_mul(nm, den), d)[0]
            for k in (n, n + 1):
                if p_eval(full, ys[k]) != vals[k] * p_eval(den, ys[k]) % PRIME:
                    raise ReconstructionError("check point failed")
            fits[key] = full
        vec = []
        for c in range(ncols):
            terms = {}
            for (cc, e), full in fits.items():
                if cc != c:
                    continue
                for ey, coef in enumerate(full):
                    if coef:
                        terms[(e, ey)] = rational_number(coef)
            vec.append(LaurentPoly(terms, (x, y)) if terms else LaurentPoly.const(0))
        basis.append(vec)
        del degs
    return basis
