"""The q-Weyl algebra generated by E and Q with EQ = qQE, localized at Q(q, Q).

An operator is stored left-normalized as ``{j: c_j}`` meaning
``sum_j c_j(Q, q) E**j`` with every coefficient a :class:`RationalFunction`.
Acting on sequences, ``(E f)(n) = f(n + 1)`` and ``(Q f)(n) = q**n f(n)``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping

from .poly import LaurentPoly
from .ratfunc import PoleError, RationalFunction

SHIFT = "E"
MULT = "Q"
BASE = "q"


class WeylOp:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        out: Dict[int, RationalFunction] = {}
        for j, c in (coeffs or {}).items():
            if j < 0:
                raise ValueError("negative E-degree")
            c = RationalFunction.coerce(c)
            if not c.is_zero():
                out[j] = c
        self.coeffs = out

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_poly(cls, p, shift: str = SHIFT) -> "WeylOp":
        """Read a commutative expression in E as an operator with E-powers on the right."""
        if isinstance(p, RationalFunction):
            if shift in p.den.vars:
                raise ValueError("E may not occur in a denominator")
            den = RationalFunction(1, p.den)
            return cls({j: den * c for j, c in p.num.coefficients_in(shift).items()})
        p = LaurentPoly.coerce(p)
        if p.min_degree(shift) < 0:
            raise ValueError("negative power of E")
        return cls(p.coefficients_in(shift))

    @classmethod
    def shift(cls, k: int = 1) -> "WeylOp":
        return cls({k: 1})

    @classmethod
    def scalar(cls, c) -> "WeylOp":
        return cls({0: c})

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero operator")
        return max(self.coeffs)

    def leading_coefficient(self) -> RationalFunction:
        return self.coeffs[self.degree()]

    def coefficient(self, j: int) -> RationalFunction:
        return self.coeffs.get(j, RationalFunction(0))

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading_coefficient() == 1

    def to_poly(self, shift: str = SHIFT) -> LaurentPoly:
        """Commutative image with E-powers written on the right."""
        out = LaurentPoly.const(0)
        for j, c in self.coeffs.items():
            out = out + c.as_poly() * LaurentPoly.var(shift, j)
        return out

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _op(other)
        out = dict(self.coeffs)
        for j, c in other.coeffs.items():
            out[j] = out[j] + c if j in out else c
        return WeylOp(out)

    __radd__ = __add__

    def __neg__(self):
        return WeylOp({j: -c for j, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_op(other))

    def __rsub__(self, other):
        return _op(other) - self

    def __mul__(self, other):
        return weyl_mul(self, _op(other))

    def __rmul__(self, other):
        return weyl_mul(_op(other), self)

    def __pow__(self, n: int):
        out = WeylOp.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def left_scale(self, c) -> "WeylOp":
        c = RationalFunction.coerce(c)
        return WeylOp({j: c * a for j, a in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, WeylOp):
            try:
                other = _op(other)
            except TypeError:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items(), key=lambda t: t[0])))

    def map_coefficients(self, fn: Callable[[RationalFunction], RationalFunction]) -> "WeylOp":
        return WeylOp({j: fn(c) for j, c in self.coeffs.items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in sorted(self.coeffs, reverse=True):
            c = self.coeffs[j]
            e = "" if j == 0 else ("E" if j == 1 else f"E^{j}")
            if c == 1 and e:
                parts.append(e)
            else:
                parts.append(f"({c})" + (f"*{e}" if e else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"WeylOp({self})"


def _op(x) -> WeylOp:
    if isinstance(x, WeylOp):
        return x
    if isinstance(x, (int, Fraction, LaurentPoly, RationalFunction)):
        return WeylOp.scalar(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to WeylOp")


def q_shift(c: RationalFunction, k: int) -> RationalFunction:
    """c(Q) -> c(q**k Q)."""
    return c.shift(MULT, BASE, k)


def weyl_mul(a: WeylOp, b: WeylOp) -> WeylOp:
    """(alpha E^i)(beta E^j) = alpha * beta(q^i Q) E^{i+j}."""
    out: Dict[int, RationalFunction] = {}
    for i, alpha in a.coeffs.items():
        for j, beta in b.coeffs.items():
            t = alpha * q_shift(beta, i)
            out[i + j] = out[i + j] + t if i + j in out else t
    return WeylOp(out)


def right_divmod(a: WeylOp, b: WeylOp):
    """Return (quo, rem) with a = quo * b + rem and deg rem < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero operator")
    d = b.degree()
    lb = b.leading_coefficient()
    quo: Dict[int, RationalFunction] = {}
    rem = a
    while not rem.is_zero() and rem.degree() >= d:
        m = rem.degree()
        c = rem.leading_coefficient() / q_shift(lb, m - d)
        quo[m - d] = c
        rem = rem - WeylOp({m - d: c}) * b
    return WeylOp(quo), rem


def make_monic(a: WeylOp) -> WeylOp:
    return a.left_scale(a.leading_coefficient().inverse())


def weyl_apply(P: WeylOp, f: "QSequence", n: int) -> RationalFunction:
    """(P f)(n) = sum_j c_j(q**n, q) f(n + j)."""
    total = RationalFunction(0)
    for j, c in P.coeffs.items():
        try:
            cn = c.monomial_subs({MULT: {BASE: n}})
        except PoleError as exc:
            raise PoleError(f"coefficient of E^{j} has a pole at Q = q^{n}") from exc
        total = total + cn * f(n + j)
    return total


def op_reverse(p: LaurentPoly, shift: str = SHIFT) -> LaurentPoly:
    """P^op(E, Q) = E**deg_E(P) * P(1/E, Q)."""
    p = LaurentPoly.coerce(p)
    if p.min_degree(shift) < 0:
        raise ValueError("op_reverse needs a polynomial in E")
    return p.reverse(shift)


def specialize(P, which: str):
    """Coefficient-wise substitution q -> 1 or Q -> 1.

    A WeylOp specialized at q -> 1 becomes a commutative LaurentPoly in
    (E, Q) when every coefficient is regular there; Q -> 1 keeps a WeylOp.
    """
    if which not in ("q1", "Q1"):
        raise ValueError("which must be 'q1' or 'Q1'")
    v = BASE if which == "q1" else MULT
    if isinstance(P, LaurentPoly):
        return P.evaluate({v: 1})
    out = {}
    for j, c in P.coeffs.items():
        try:
            out[j] = c.evaluate({v: 1})
        except PoleError as exc:
            raise PoleError(f"coefficient of E^{j} has a pole at {v} = 1") from exc
    op = WeylOp(out)
    if which == "q1" and all(c.is_polynomial() for c in op.coeffs.values()):
        return op.to_poly()
    return op


class QSequence:
    """A sequence n -> Q(q) with a memo table.

    The memo is guarded by a lock, so one instance may be shared between
    threads; the generator itself runs outside the lock and must be pure.
    """

    def __init__(self, generator: Callable[[int], object], name: str = ""):
        self._gen = generator
        self._cache: Dict[int, RationalFunction] = {}
        self._lock = threading.Lock()
        self.name = name

    def __call__(self, n: int) -> RationalFunction:
        with self._lock:
            hit = self._cache.get(n)
        if hit is not None:
            return hit
        value = RationalFunction.coerce(self._gen(n))
        with self._lock:
            return self._cache.setdefault(n, value)

    def values(self, ns: Iterable[int]):
        return [self(n) for n in ns]

    def apply(self, P: WeylOp) -> "QSequence":
        """The sequence n -> (P f)(n)."""
        return QSequence(lambda n: weyl_apply(P, self, n), name=f"({P})*{self.name}")


def constant_sequence(c=1) -> QSequence:
    return QSequence(lambda n: c, name=str(c))
