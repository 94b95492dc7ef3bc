"""The degree-2 rational map phi between the C-curve and the A-curve of a twist knot.

    phi(E) = L (M^2 - 1)^2 / (M (L + M)(1 + L M)),   phi(Q) = (1 + L M)/(L + M)

pulls C_p^op(E, Q) back to A_p(L, M^{1/2}) times an explicit product of
powers of M, L + M and 1 + L M.  This module evaluates that bridge,
inverts it with a resultant, and runs the structural checks on C_p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .cpoly import cpoly_closed
from .cyclotomic import alexander_twist, block_coeff
from .gcd import primitive_part, radical, resultant
from .poly import LaurentPoly, parse
from .qweyl import op_reverse
from .ratfunc import RationalFunction, poly_substitute

L = LaurentPoly.var("L")
M = LaurentPoly.var("M")
E = LaurentPoly.var("E")
Q = LaurentPoly.var("Q")


@dataclass(frozen=True)
class PhiMap:
    image_E: RationalFunction
    image_Q: RationalFunction

    def __call__(self, P) -> RationalFunction:
        return poly_substitute(LaurentPoly.coerce(P), {"E": self.image_E, "Q": self.image_Q})


PHI = PhiMap(
    RationalFunction(L * (M ** 2 - 1) ** 2, M * (L + M) * (1 + L * M)),
    RationalFunction(1 + L * M, L + M),
)

# coefficients of the three-term A-polynomial recursion, evaluated at (L, M^{1/2})
HS_X = parse("-L + L^2 + 2*L*M + M^2 + 2*L*M^2 + L^2*M^2 + 2*L*M^3 + M^4 - L*M^4")
HS_Y = M ** 2 * (L + M) ** 4


def phi_substitute(P) -> RationalFunction:
    return PHI(P)


@dataclass(frozen=True)
class APolyCandidate:
    p: int
    poly: LaurentPoly


def normalize_sign(f: LaurentPoly) -> LaurentPoly:
    """Make the coefficient of the lex-largest term of top total degree positive."""
    if f.is_zero():
        return f
    top = f.total_degree()
    lead = max((e for e in f.terms if sum(e) == top))
    return -f if f.terms[lead] < 0 else f


def cphi_factor(p: int) -> RationalFunction:
    """The factor relating phi C_p^op to A_p(L, M^{1/2})."""
    if p >= 0:
        return RationalFunction((1 + L * M) ** p, M ** p * (L + M) ** (3 * p - 1))
    return RationalFunction(1, (M * (L + M) * (1 + L * M)) ** (-p))


def phi_cleared(P) -> tuple:
    """phi(P) as (numerator, d_M, d_LM, d_1LM): numerator / (M^d_M (L+M)^d_LM (1+LM)^d_1LM).

    Each monomial E^a Q^b maps to L^a (M^2-1)^{2a} (1+LM)^{b-a} / (M^a (L+M)^{a+b}),
    so the common denominator is known in advance and no gcd is needed.
    """
    P = LaurentPoly.coerce(P)
    items = [(e.get("E", 0), e.get("Q", 0), c) for e, c in _named_terms(P)]
    dM = max(a for a, _, _ in items)
    dS = max(a + b for a, b, _ in items)
    dA = max(max(a - b for a, b, _ in items), 0)
    num = LaurentPoly.const(0)
    for a, b, c in items:
        num = num + (L ** a * (M ** 2 - 1) ** (2 * a) * (1 + L * M) ** (b - a + dA)
                     * M ** (dM - a) * (L + M) ** (dS - a - b)).scale(c)
    return num, dM, dS, dA


def _named_terms(P: LaurentPoly):
    for e, c in P.terms.items():
        yield dict(zip(P.vars, e)), c


def _times_power(f: LaurentPoly, base: LaurentPoly, k: int) -> LaurentPoly:
    """f * base^k, by exact division when k < 0."""
    if k >= 0:
        return f * base ** k
    return f.divexact(base ** (-k))


@lru_cache(maxsize=None)
def a_candidate_raw(p: int) -> LaurentPoly:
    """phi(C_p^op) / factor without sign normalization."""
    if p == 0:
        return LaurentPoly.const(1)
    num, dM, dS, dA = phi_cleared(op_reverse(cpoly_closed(p).poly))
    if p > 0:
        eM, eS, eA = p - dM, 3 * p - 1 - dS, -p - dA
    else:
        eM, eS, eA = -p - dM, -p - dS, -p - dA
    try:
        out = num * LaurentPoly.var("M", eM)
        out = _times_power(out, L + M, eS)
        out = _times_power(out, 1 + L * M, eA)
    except ArithmeticError as exc:
        raise ArithmeticError(f"phi(C_{p}^op) / factor is not a polynomial") from exc
    if not out.is_polynomial():
        raise ArithmeticError(f"phi(C_{p}^op) / factor has negative powers")
    return out


def a_candidate(p: int) -> APolyCandidate:
    """A^_p = phi(C_p^op) / factor, asserted to be a polynomial in (L, M)."""
    return APolyCandidate(p, normalize_sign(a_candidate_raw(p)))


def hs_recursion_check(pmin: int, pmax: int) -> bool:
    """A_p = x A_{p - sgn p} - y A_{p - 2 sgn p} for every p whose predecessors are in range."""
    if pmin > pmax:
        pmin, pmax = pmax, pmin
    if pmin < 0 < pmax:
        raise ValueError("the range must lie on one side of 0")
    for p in range(pmin, pmax + 1):
        s = 1 if p > 0 else -1
        if not (pmin <= p - 2 * s <= pmax):
            continue
        a, b, c = (a_candidate_raw(r) for r in (p, p - s, p - 2 * s))
        if a != HS_X * b - HS_Y * c:
            return False
    return True


# -- inversion -------------------------------------------------------------------

ELIMINANT = E * M * Q - M ** 2 * Q - Q + Q ** 2 * M + M
UNITS = (E, Q, parse("1 + 2*Q + Q^2 + Q*E"), parse("1 - 2*Q + Q^2 + Q*E"))


def invert_phi(G: LaurentPoly) -> LaurentPoly:
    """rad Res_M(G((MQ - 1)/(M - Q), M) (M - Q)^{deg_L G}, E M Q - M^2 Q - Q + Q^2 M + M)."""
    G = LaurentPoly.coerce(G)
    if G.is_zero():
        raise ValueError("invert_phi of the zero polynomial")
    if "L" not in G.vars and "M" not in G.vars:
        return G
    d = max(G.degree("L"), 0) if "L" in G.vars else 0
    sub = poly_substitute(G, {"L": RationalFunction(M * Q - 1, M - Q)}) * RationalFunction((M - Q) ** d)
    if not sub.is_polynomial():
        raise ArithmeticError("denominator left after clearing (M - Q)")
    cleared = sub.as_poly()
    if cleared.is_zero():
        raise ArithmeticError("the cleared polynomial vanishes identically")
    if "M" not in cleared.vars:
        return primitive_part(cleared)
    return radical(resultant(cleared, ELIMINANT, "M"))


def monomial_equiv(f: LaurentPoly, g: LaurentPoly, units: Sequence[LaurentPoly] = UNITS) -> bool:
    """Is f / g a constant times a product of integer powers of the units?

    Monomial units are units of the Laurent ring already; the others are
    divided out of the reduced numerator and denominator repeatedly.
    """
    f, g = LaurentPoly.coerce(f), LaurentPoly.coerce(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("monomial_equiv needs nonzero arguments")
    q = RationalFunction(f, g)
    rest = [u for u in units if not u.is_monomial()]
    mono_vars = {v for u in units if u.is_monomial() for v in u.vars}
    for part in (q.num, q.den):
        for u in rest:
            while not part.is_constant() and u.divides(part):
                part = part.divexact(u)
        m, core = part.split_monomial()
        if any(x for v, x in zip(part.vars, m) if v not in mono_vars):
            return False
        if not core.is_constant():
            return False
    return True


def round_trip(p: int) -> bool:
    """invert_phi(A^_p) agrees with rad(C_p^op) modulo the unit set."""
    return monomial_equiv(invert_phi(a_candidate(p).poly), radical(op_reverse(cpoly_closed(p).poly)))


# -- structure checks --------------------------------------------------------------

CLASP_FACTORS = (parse("(Q - 1)^2 + Q*E"), parse("(Q + 1)^2 + Q*E"))


def clasp_factor_check(p: int) -> bool:
    """Neither (Q - 1)^2 + QE nor (Q + 1)^2 + QE divides C_p^op."""
    if p == 0:
        raise ValueError("p must be nonzero")
    op = op_reverse(cpoly_closed(p).poly)
    return not any(f.divides(op) for f in CLASP_FACTORS)


def degree_check(p: int) -> bool:
    """Total degree of the plane curve C_p(E, Q) = 0 is 3|p| - 2.

    For p < 0, C_p carries negative powers of Q; the curve is cut out by
    the polynomial left after removing the monomial factor.
    """
    if p == 0:
        raise ValueError("p must be nonzero")
    _, core = cpoly_closed(p).poly.split_monomial()
    return core.total_degree() == 3 * abs(p) - 2


def specialization_chain(p: int) -> bool:
    """phi(C_p^op) at L = 1, C_p^op(M - 2 + 1/M, 1) and Delta_p(M) all agree."""
    op = op_reverse(cpoly_closed(p).poly)
    num, dM, dS, dA = phi_cleared(op)
    at_l1 = RationalFunction(num.evaluate({"L": 1}), M ** dM * (1 + M) ** (dS + dA))
    direct = poly_substitute(op, {"E": M - 2 + LaurentPoly.var("M", -1), "Q": 1})
    return at_l1 == direct == RationalFunction(alexander_twist(p))


# -- the bivariate array C(n, k) ---------------------------------------------------------

def block_coeff_unnormalized(n: int, k: int) -> LaurentPoly:
    """prod_{j=1}^{k} (u^{n-j} - u^{j-n})(u^{n+j} - u^{-n-j}) with u^2 = q.

    Equals C(n, k) (q - 2 + 1/q)^k.
    """
    return block_coeff(n, k) * (LaurentPoly.var("q") - 2 + LaurentPoly.var("q", -1)) ** k


def _qq(e: int) -> LaurentPoly:
    return LaurentPoly.var("q", e)


def heuristic_annihilators(nmax: int, kmax: int) -> bool:
    """The n- and k-ratio identities of the array on 1 <= n <= nmax, 0 <= k <= kmax.

    (1 - q^{k-n})(1 - q^{1+n}) C(n+1,k) = (1 - q^{-n})(1 - q^{1+k+n}) C(n,k)
    C(n,k+1) = -q^{-1-k}(1 - q^{1+k-n})(1 - q^{1+k+n}) C(n,k)

    Cross-multiplied, so cells with k >= n (where C vanishes) are covered.
    Both hold verbatim for the unnormalized products; for the brace
    products the k-identity carries the extra constant q/(1 - q)^2.  Both
    versions are checked.
    """
    return _ratio_identities(nmax, kmax, False) and _ratio_identities(nmax, kmax, True)


def _ratio_identities(nmax: int, kmax: int, normalized: bool) -> bool:
    C = block_coeff if normalized else block_coeff_unnormalized
    k_scale = _qq(1) if normalized else LaurentPoly.const(1)
    k_den = (1 - _qq(1)) ** 2 if normalized else LaurentPoly.const(1)
    for n in range(1, nmax + 1):
        for k in range(0, kmax + 1):
            lhs = (1 - _qq(k - n)) * (1 - _qq(1 + n)) * C(n + 1, k)
            rhs = (1 - _qq(-n)) * (1 - _qq(1 + k + n)) * C(n, k)
            if lhs != rhs:
                return False
            lhs = k_den * C(n, k + 1)
            rhs = -_qq(-1 - k) * k_scale * (1 - _qq(1 + k - n)) * (1 - _qq(1 + k + n)) * C(n, k)
            if lhs != rhs:
                return False
    return True


def within(ps: Iterable[int], check) -> bool:
    return all(check(p) for p in ps)
