"""q-creative telescoping for proper q-hypergeometric terms F(n, k).

A term is described by its two shift ratios, rational in q, Q = q^n and
K = q^k.  The Celine solver searches for a k-free relation

    sum_{i<=I, j<=J} a_{ij}(q, Q) F(n+i, k+j) = 0

and sums it over k, which yields sum_i (sum_j a_{ij}) S(n+i) = 0 for
S(n) = sum_k F(n, k) over a full summation range.  Certificates are only
verified, never searched for.

The module also holds the explicit certificate for the twist-knot summand
and the rational identities behind it (:func:`paper_apparatus`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .cpoly import nc_backward_coeffs, nc_cpoly
from .gcd import gcd_poly
from .linalg import nullspace
from .modular import CompiledMatrix, reconstruct_kernel
from .poly import LaurentPoly, parse
from .qterm import QProperTerm, binomial_theorem_summand, quotient, ratio, t_term, twist_summand
from .qweyl import BASE, MULT, QSequence, WeylOp, make_monic, q_shift, right_divmod, weyl_apply
from .ratfunc import PoleError, RationalFunction

KVAR = "K"


@dataclass(frozen=True)
class HGTerm:
    ratio_n: RationalFunction
    ratio_k: RationalFunction
    params: Tuple[str, ...] = ()
    name: str = ""
    term: Optional[QProperTerm] = field(default=None, compare=False, hash=False)

    @classmethod
    def from_qterm(cls, t: QProperTerm, name: str = "") -> "HGTerm":
        return cls(ratio(t, n=1), ratio(t, k=1), name=name, term=t)

    def compatible(self) -> bool:
        """ratio_n(Q, qK) ratio_k(Q, K) == ratio_k(qQ, K) ratio_n(Q, K)."""
        lhs = self.ratio_n.shift(KVAR, BASE, 1) * self.ratio_k
        rhs = self.ratio_k.shift(MULT, BASE, 1) * self.ratio_n
        return lhs == rhs

    def value(self, n: int, k: int) -> RationalFunction:
        if self.term is None:
            raise ValueError("this term carries no explicit values")
        return self.term.subs(n=n, k=k).value()


def twist_term(p: int) -> HGTerm:
    """The summand s_p(n, k) of the cyclotomic function."""
    return HGTerm.from_qterm(twist_summand(p), name=f"twist:{p}")


def binomial_term() -> HGTerm:
    """qbinom(n, k) (-1)^k q^{k(k-1)/2}, summing to delta_{n,0}."""
    return HGTerm.from_qterm(binomial_theorem_summand(), name="qbinomial")


# -- shifts ---------------------------------------------------------------------

def _inv(r: RationalFunction, what: str) -> RationalFunction:
    if r.is_zero():
        raise PoleError(f"intermediate shift hits a zero of {what}")
    return r.inverse()


@lru_cache(maxsize=4096)
def shift_ratio(t: HGTerm, dn: int, dk: int) -> RationalFunction:
    """F(n+dn, k+dk) / F(n, k), composed n-steps first."""
    out = RationalFunction(1)
    for a in range(dn) if dn > 0 else ():
        out = out * t.ratio_n.shift(MULT, BASE, a)
    for a in range(1, -dn + 1) if dn < 0 else ():
        out = out * _inv(t.ratio_n.shift(MULT, BASE, -a), "ratio_n")
    rk = t.ratio_k.shift(MULT, BASE, dn)
    for b in range(dk) if dk > 0 else ():
        out = out * rk.shift(KVAR, BASE, b)
    for b in range(1, -dk + 1) if dk < 0 else ():
        out = out * _inv(rk.shift(KVAR, BASE, -b), "ratio_k")
    return out


def _coeff_items(coeffs) -> List[Tuple[int, RationalFunction]]:
    if isinstance(coeffs, Mapping):
        items = coeffs.items()
    else:
        items = enumerate(coeffs)
    return [(i, RationalFunction.coerce(c)) for i, c in items]


def _combination_vanishes(pairs) -> bool:
    """sum c * r == 0 over a common denominator, with no gcd in the sum."""
    pairs = [(RationalFunction.coerce(c), r) for c, r in pairs if not RationalFunction.coerce(c).is_zero()]
    if not pairs:
        return True
    den = LaurentPoly.const(1)
    for c, r in pairs:
        den = _lcm(_lcm(den, c.den), r.den)
    total = LaurentPoly.const(0)
    for c, r in pairs:
        total = total + c.num * r.num * den.divexact(c.den * r.den)
    return total.is_zero()


def verify_kfree(t: HGTerm, coeffs) -> bool:
    """sum_i a_i F(n+i, k) / F(n, k) == 0."""
    return _combination_vanishes((a, shift_ratio(t, i, 0)) for i, a in _coeff_items(coeffs))


@dataclass(frozen=True)
class Certificate:
    """sum_i a_i F(n+i, k) = G(n, k+1) - G(n, k) with G = cert * F.

    Negative shifts i are allowed.
    """

    coeffs: Dict[int, RationalFunction]
    cert: RationalFunction

    def __hash__(self):
        return hash((tuple(sorted(self.coeffs.items(), key=lambda t: t[0])), self.cert))


def verify_certificate(t: HGTerm, c: Certificate) -> bool:
    lhs = RationalFunction(0)
    for i, a in _coeff_items(c.coeffs):
        if not a.is_zero():
            lhs = lhs + a * shift_ratio(t, i, 0)
    rhs = c.cert.shift(KVAR, BASE, 1) * t.ratio_k - c.cert
    return lhs == rhs


# -- Sister Celine ---------------------------------------------------------------

@dataclass(frozen=True)
class NotFound:
    reason: str = "only the zero solution exists"

    def __bool__(self):
        return False


@dataclass(frozen=True)
class CelineSolution:
    I: int
    J: int
    a: Dict[Tuple[int, int], RationalFunction]

    def summed(self) -> Dict[int, RationalFunction]:
        """b_i = sum_j a_{ij}: the coefficients of the recursion for S(n)."""
        out: Dict[int, RationalFunction] = {}
        for (i, _), c in self.a.items():
            out[i] = out.get(i, RationalFunction(0)) + c
        return out

    def operator(self) -> WeylOp:
        return telescoped_operator(None, self.summed())


def _lcm(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return (a * b).divexact(gcd_poly(a, b))


def kfree_identity_holds(t: HGTerm, a: Mapping[Tuple[int, int], RationalFunction]) -> bool:
    return _combination_vanishes((c, shift_ratio(t, i, j)) for (i, j), c in a.items())


def celine_system(t: HGTerm, I: int, J: int):
    """Cells, cleared columns and the K-coefficient rows of the ansatz of size (I, J)."""
    if I < 0 or J < 0:
        raise ValueError("ansatz bounds must be nonnegative")
    cells = [(i, j) for i in range(I + 1) for j in range(J + 1)]
    ratios = [shift_ratio(t, i, j) for i, j in cells]
    den = LaurentPoly.const(1)
    for r in ratios:
        den = _lcm(den, r.den)
    cols = [r.num * den.divexact(r.den) for r in ratios]
    powers = sorted({e for c in cols for e in c.coefficients_in(KVAR)})
    rows = [[c.coefficients_in(KVAR).get(e, LaurentPoly.const(0)) for c in cols] for e in powers]
    return cells, cols, rows


def _kernel(cols, rows, ncols: int, method: str):
    if method == "bareiss":
        return nullspace(rows, ncols)
    if method != "modular":
        raise ValueError(f"unknown method {method!r}")
    if any(set(e.vars) - {MULT, BASE} for row in rows for e in row):
        # extra parameters: the two-variable reconstruction does not apply
        return nullspace(rows, ncols)
    mat = CompiledMatrix(rows, "Q", "q")
    basis = reconstruct_kernel(mat, "Q", "q")
    for vec in basis:
        total = LaurentPoly.const(0)
        for v, c in zip(vec, cols):
            total = total + v * c
        if not total.is_zero():
            raise ArithmeticError("reconstructed kernel vector failed the exact check")
    return basis


def celine_solve(t: HGTerm, I: int, J: int, method: str = "modular"):
    """Solve the double-shift ansatz of size (I, J).

    method="bareiss" runs fraction-free elimination over Q(q, Q);
    method="modular" reconstructs the kernel from evaluations mod a prime and
    certifies it as an exact polynomial identity.  Returns a
    :class:`CelineSolution` whose summed operator is nonzero, or
    :class:`NotFound`.  Every returned solution has been re-checked against
    the rational identity.
    """
    cells, cols, rows = celine_system(t, I, J)
    basis = _kernel(cols, rows, len(cells), method)
    for vec in basis:
        a = {cell: RationalFunction(v, reduced=True) for cell, v in zip(cells, vec) if not v.is_zero()}
        sol = CelineSolution(I, J, a)
        if not kfree_identity_holds(t, a):
            raise ArithmeticError("solver output failed the k-free identity")
        if not sol.operator().is_zero():
            return sol
    return NotFound() if not basis else NotFound("every solution sums to the zero operator")


def minimal_order(t: HGTerm, max_order: int, max_kdeg: int, method: str = "modular"):
    """Smallest I (and then J) whose ansatz yields a nonzero operator."""
    for I in range(max_order + 1):
        for J in range(max_kdeg + 1):
            sol = celine_solve(t, I, J, method)
            if sol:
                return sol
    return NotFound(f"no operator with order <= {max_order} and k-degree <= {max_kdeg}")


def telescoped_operator(t: Optional[HGTerm], a, boundary: Optional[RationalFunction] = None) -> WeylOp:
    """sum_i a_i E^i, or its homogenization (E - 1) (1/R) sum_i a_i E^i.

    The second form kills S whenever sum_i a_i S(n+i) = R(n).
    """
    op = WeylOp(dict(_coeff_items(a)))
    if boundary is None:
        return op
    R = RationalFunction.coerce(boundary)
    if R.is_zero():
        raise ZeroDivisionError("the remainder R is identically zero")
    inv = R.inverse()
    return WeylOp({1: q_shift(inv, 1), 0: -inv}) * op


def boundary_remainder(t: HGTerm, c: Certificate, n: int, upper: int) -> RationalFunction:
    """G(n, upper+1) - G(n, 0): the right side after summing k = 0..upper."""

    def G(k: int) -> RationalFunction:
        f = t.value(n, k)
        if f.is_zero():
            return f
        return c.cert.monomial_subs({MULT: {BASE: n}, KVAR: {BASE: k}}) * f

    return G(upper + 1) - G(0)


def explicit_sum(t: HGTerm, n: int, ks: Sequence[int]) -> RationalFunction:
    total = RationalFunction(0)
    for k in ks:
        total = total + t.value(n, k)
    return total


def telescoping_residuals(t: HGTerm, op: WeylOp, ks, n_max: int = 10) -> List[RationalFunction]:
    """(op S)(n) for n = 0..n_max, S summed term by term over ks(n)."""
    S = QSequence(lambda n: explicit_sum(t, n, ks(n)), name=t.name)
    return [weyl_apply(op, S, n) for n in range(n_max + 1)]


# -- the explicit twist certificate -----------------------------------------------

def _q(e: int) -> LaurentPoly:
    return LaurentPoly.var(BASE, e)


def twist_certificate_function(p: int) -> RationalFunction:
    """Cert_p(n, k) = q^{p(k+n+1)} (q^{k+1} - 1)(q^n - q^k) / ((q^{2k+1} - 1)(q^n - 1))."""
    mono = LaurentPoly.monomial({"K": p, "Q": p, "q": p})
    return RationalFunction(mono * parse("(q*K - 1)*(Q - K)"), parse("(q*K^2 - 1)*(Q - 1)"))


def r_function(p: int) -> RationalFunction:
    """r_p(n, k) = sum_{i=1}^{p} a'_p(n, i) s_p(n-i, k) / s_p(n, k); zero for p <= 0."""
    if p <= 0:
        return RationalFunction(0)
    s = twist_summand(p)
    out = RationalFunction(0)
    for i in range(1, p + 1):
        out = out + nc_backward_coeffs(p, i) * ratio(s, n=-i)
    return out


def d_function(p: int) -> RationalFunction:
    """D_p(n, k) = Cert_p(n, k) - Cert_p(n, k-1) s_p(n, k-1)/s_p(n, k) - 1."""
    cert = twist_certificate_function(p)
    return cert - cert.shift(KVAR, BASE, -1) * ratio(twist_summand(p), k=-1) - 1


def twist_certificate(p: int) -> Certificate:
    """The certificate in the forward form used by :func:`verify_certificate`.

    The explicit relation telescopes as G(n,k) - G(n,k-1); writing
    G'(n, k) = G(n, k-1) turns it into G'(n,k+1) - G'(n,k) with
    cert'(n, k) = Cert_p(n, k-1) F(n, k-1)/F(n, k).
    """
    if p <= 0:
        raise ValueError("the explicit certificate is stated for p > 0")
    coeffs = {0: RationalFunction(1)}
    for i in range(1, p + 1):
        coeffs[-i] = nc_backward_coeffs(p, i)
    cert = twist_certificate_function(p).shift(KVAR, BASE, -1) * ratio(twist_summand(p), k=-1)
    return Certificate(coeffs, cert)


_RIGHT = parse("(-q + Q)*(K - Q)*(-1 + q*K*Q)")
_PRINTED_RIGHT = parse("(-q + Q)*(-K + Q)*(-1 + q*K*Q)")
_C1 = parse("-(K - Q)*(-q + Q)*(-1 + q*K*Q)")
_C2 = parse("q^2*K*Q^2*(Q - 1)")
_C4 = parse("q^2*K*(Q - 1)")


def _five_term(neg: bool, lead: LaurentPoly):
    """The five (coefficient, shift) pairs of the t-recursion."""
    c1 = lead * _C1
    if not neg:
        return [(c1, dict(p=-1, n=-1, i=-1)), (_C2, dict(p=-2, j=-1)), (-_C2, dict(p=-1, j=-1)),
                (-_C4, dict(p=-1)), (_C4, {})]
    return [(c1, dict(p=-1, n=-1, i=-1)), (_C2, dict(p=-2)), (-_C2, dict(p=-1, j=-1)),
            (-_C4, dict(p=-1)), (_C4, dict(j=-1))]


def _lead(h: int, p: Optional[int]) -> LaurentPoly:
    """q^p for h = 1 and q^{p-1} for h = 2."""
    base = LaurentPoly.var("P") if p is None else _q(p)
    return base if h == 1 else base * _q(-1)


def t_recursion_symbolic(h: int, neg: bool) -> bool:
    """The five-term recursion divided by t^{(h)}_p(n,k,i,j), in q, Q, K, P, I, J."""
    t = t_term(h, neg)
    total = RationalFunction(0)
    for c, d in _five_term(neg, _lead(h, None)):
        total = total + RationalFunction.coerce(c) * quotient(t.shift(**d), t)
    return total.is_zero()


def t_recursion_enumerated(h: int, p: int, i_range, j_range) -> bool:
    """The same recursion with p, i, j fixed, relative to the bare factorial part."""
    neg = p < 0
    t = t_term(h, neg)
    for i in i_range:
        for j in j_range:
            ref = QProperTerm(sign=t.sign, expo=t.expo, facs=t.facs).subs(p=p, i=i, j=j)
            total = RationalFunction(0)
            for c, d in _five_term(neg, _lead(h, p)):
                term = t.shift(**d).subs(p=p, i=i, j=j)
                total = total + RationalFunction.coerce(c) * quotient(term, ref)
            if not total.is_zero():
                return False
    return True


def t_vanishes_beyond(p: int, h: int) -> bool:
    """t^{(h)}_p(n,k,i,j) = 0 when j > p - i - h + 1 or i > p (p > 0)."""
    t = t_term(h)
    for i in range(1, p + 3):
        for j in range(0, p + 3):
            if j > p - i - h + 1 or i > p:
                if not t.subs(p=p, i=i, j=j).is_zero():
                    return False
    return True


def _three_step(f, p: int) -> RationalFunction:
    """Left side of the recursion for r_p (or D_p) at step p."""
    return (RationalFunction(_C1 * _q(p)) * f(p - 1).shift(MULT, BASE, -1)
            + RationalFunction(_C2) * (f(p - 2) - f(p - 1))
            + RationalFunction(_C4) * (f(p) - f(p - 1)))


def r_recursion_holds(p: int, printed_sign: bool = False) -> bool:
    rhs = _PRINTED_RIGHT if printed_sign else _RIGHT
    return (_three_step(r_function, p) - RationalFunction(rhs * _q(p))).is_zero()


def d_recursion_holds(p: int) -> bool:
    return (_three_step(d_function, p) - RationalFunction(_RIGHT * _q(p))).is_zero()


def cert_boundary_vanishes(p: int) -> bool:
    """Cert_p(n, -1) = 0."""
    return twist_certificate_function(p).monomial_subs({KVAR: {BASE: -1}}).is_zero()


def cert_identity_holds(p: int) -> bool:
    """1 + r_p(n, k) = Cert_p(n, k) - Cert_p(n, k-1) s_p(n, k-1)/s_p(n, k)."""
    return (1 + r_function(p) - d_function(p) - 1).is_zero()


@dataclass
class ApparatusReport:
    p: int
    checks: Dict[str, bool] = field(default_factory=dict)
    notes: Dict[str, bool] = field(default_factory=dict)

    @property
    def failed(self) -> List[str]:
        return [k for k, v in self.checks.items() if not v]

    @property
    def ok(self) -> bool:
        return not self.failed


def paper_apparatus(p: int) -> ApparatusReport:
    """Run every rational identity behind the explicit twist certificate.

    For p > 0: both t-recursions (symbolic and at fixed p), the recursion for
    r_p and D_p at each step 2..p+2 that involves p, Cert_p(n,-1) = 0, the
    certificate identity and its forward-form verification.  For p < 0 only
    the t-recursions are defined.

    ``notes`` records identities checked in their printed form that are
    known to fail; they do not affect ``ok``.
    """
    if p == 0 or abs(p) > 5:
        raise ValueError("p must satisfy 1 <= |p| <= 5")
    rep = ApparatusReport(p)
    neg = p < 0
    m = abs(p)
    for h in (1, 2):
        rep.checks[f"t{h}_recursion_symbolic"] = t_recursion_symbolic(h, neg)
        rep.checks[f"t{h}_recursion_fixed_p"] = t_recursion_enumerated(h, p, range(1, m + 2), range(0, m + 2))
    rep.notes["t2_recursion_with_q^p"] = _t2_printed(neg)
    if neg:
        return rep
    for h in (1, 2):
        rep.checks[f"t{h}_vanishing"] = t_vanishes_beyond(p, h)
    for step in range(2, p + 3):
        rep.checks[f"r_recursion_step_{step}"] = r_recursion_holds(step)
        rep.checks[f"D_recursion_step_{step}"] = d_recursion_holds(step)
    rep.notes["r_recursion_printed_sign"] = r_recursion_holds(max(p, 2), printed_sign=True)
    rep.checks["cert_boundary"] = cert_boundary_vanishes(p)
    rep.checks["cert_identity"] = cert_identity_holds(p)
    rep.checks["verify_certificate"] = verify_certificate(twist_term(p), twist_certificate(p))
    return rep


def _t2_printed(neg: bool) -> bool:
    t = t_term(2, neg)
    total = RationalFunction(0)
    for c, d in _five_term(neg, LaurentPoly.var("P")):
        total = total + RationalFunction.coerce(c) * quotient(t.shift(**d), t)
    return total.is_zero()


def celine_matches_cpoly(p: int, I: int, J: int) -> bool:
    """Does the (I, J) ansatz give a left multiple of C_p?"""
    sol = celine_solve(twist_term(p), I, J)
    if not sol:
        return False
    _, rem = right_divmod(sol.operator(), nc_cpoly(p).op)
    return rem.is_zero()


@dataclass(frozen=True)
class Rediscovery:
    p: int
    solution: object
    left_multiple: bool
    equal_up_to_unit: bool


def celine_rediscovery(p: int, max_order: int = 6, max_kdeg: int = 2) -> Rediscovery:
    """Lowest-order Celine operator for the twist summand, compared with C_p."""
    sol = minimal_order(twist_term(p), max_order, max_kdeg)
    if not sol:
        return Rediscovery(p, sol, False, False)
    op = sol.operator()
    target = nc_cpoly(p).op
    _, rem = right_divmod(op, target)
    return Rediscovery(p, sol, rem.is_zero(), same_up_to_unit(op, target))


def same_up_to_unit(a: WeylOp, b: WeylOp) -> bool:
    return make_monic(a) == make_monic(b)
