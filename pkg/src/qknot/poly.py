"""Sparse multivariate Laurent polynomials with exact rational coefficients.

A :class:`LaurentPoly` is an immutable map from exponent vectors (signed
integers) to nonzero coefficients.  Coefficients are ``int`` when integral and
:class:`fractions.Fraction` otherwise, so integer polynomials never pay for
fraction arithmetic.  Variables are kept sorted by name and only variables
that actually occur are stored; this makes structural equality canonical.
"""

from __future__ import annotations

import ast
import heapq
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, Mapping, Tuple, Union

Coef = Union[int, Fraction]
Exp = Tuple[int, ...]


class NotDivisibleError(ArithmeticError):
    """Raised by exact division when the divisor does not divide."""


def norm_coef(c) -> Coef:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _strip(vars_: Tuple[str, ...], terms: Dict[Exp, Coef]):
    """Drop variables whose exponent is zero in every term."""
    if not vars_:
        return vars_, terms
    used = [False] * len(vars_)
    for e in terms:
        for i, x in enumerate(e):
            if x:
                used[i] = True
    if all(used):
        return vars_, terms
    keep = [i for i, u in enumerate(used) if u]
    new_vars = tuple(vars_[i] for i in keep)
    new_terms = {tuple(e[i] for i in keep): c for e, c in terms.items()}
    return new_vars, new_terms


class LaurentPoly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[Exp, Coef] | None = None, vars: Iterable[str] = ()):
        vars_ = tuple(vars)
        raw = {} if terms is None else terms
        if list(vars_) != sorted(vars_) or len(set(vars_)) != len(vars_):
            order = sorted(set(vars_))
            if len(order) != len(vars_):
                raise ValueError(f"duplicate variables in {vars_}")
            perm = [vars_.index(v) for v in order]
            raw = {tuple(e[i] for i in perm): c for e, c in raw.items()}
            vars_ = tuple(order)
        clean: Dict[Exp, Coef] = {}
        n = len(vars_)
        for e, c in raw.items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match variables {vars_}")
            if c:
                clean[e] = norm_coef(c)
        self.vars, self.terms = _strip(vars_, clean)
        self._hash = None

    @classmethod
    def _raw(cls, vars_: Tuple[str, ...], terms: Dict[Exp, Coef]) -> "LaurentPoly":
        # trusted constructor: vars sorted, no zero coefficients, coefs normalized
        obj = cls.__new__(cls)
        obj.vars, obj.terms = _strip(vars_, terms)
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "LaurentPoly":
        c = norm_coef(c)
        return cls._raw((), {(): c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "LaurentPoly":
        return cls._raw((name,), {(power,): 1}) if power else cls.const(1)

    @classmethod
    def monomial(cls, powers: Mapping[str, int], coef=1) -> "LaurentPoly":
        names = sorted(v for v, e in powers.items() if e)
        coef = norm_coef(coef)
        if not coef:
            return cls.const(0)
        return cls._raw(tuple(names), {tuple(powers[v] for v in names): coef})

    # -- basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Coef:
        if self.vars:
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __len__(self) -> int:
        return len(self.terms)

    def index(self, v: str) -> int:
        return self.vars.index(v)

    def degree(self, v: str) -> int:
        if v not in self.vars:
            return 0
        i = self.vars.index(v)
        return max(e[i] for e in self.terms)

    def min_degree(self, v: str) -> int:
        if v not in self.vars:
            return 0
        i = self.vars.index(v)
        return min(e[i] for e in self.terms)

    def total_degree(self) -> int:
        return max(sum(e) for e in self.terms)

    def min_exponents(self) -> Exp:
        return tuple(min(col) for col in zip(*self.terms)) if self.vars else ()

    def leading_term(self) -> Tuple[Exp, Coef]:
        """Lex-largest exponent vector (variables in sorted order)."""
        e = max(self.terms)
        return e, self.terms[e]

    def leading_coefficient(self) -> Coef:
        return self.leading_term()[1]

    def coefficients_in(self, v: str) -> Dict[int, "LaurentPoly"]:
        """Split as sum of c_d * v^d; returns {d: c_d} with c_d free of v."""
        if v not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(v)
        rest = self.vars[:i] + self.vars[i + 1:]
        out: Dict[int, Dict[Exp, Coef]] = {}
        for e, c in self.terms.items():
            out.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {d: LaurentPoly._raw(rest, t) for d, t in out.items()}

    def coefficient(self, powers: Mapping[str, int]) -> Coef:
        if any(v not in self.vars for v, e in powers.items() if e):
            return 0
        e = tuple(powers.get(v, 0) for v in self.vars)
        return self.terms.get(e, 0)

    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive."""
        if not self.terms:
            return Fraction(0)
        g = 0
        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        for c in self.terms.values():
            g = gcd(g, int(c * den))
        return Fraction(g, den)

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    # -- alignment --------------------------------------------------------
    def extend(self, vars_: Tuple[str, ...]) -> Dict[Exp, Coef]:
        """Terms re-indexed over a superset of variables (sorted)."""
        if vars_ == self.vars:
            return self.terms
        pos = [vars_.index(v) for v in self.vars]
        n = len(vars_)
        out = {}
        for e, c in self.terms.items():
            new = [0] * n
            for p, x in zip(pos, e):
                new[p] = x
            out[tuple(new)] = c
        return out

    @staticmethod
    def common_vars(*polys: "LaurentPoly") -> Tuple[str, ...]:
        s = set()
        for p in polys:
            s.update(p.vars)
        return tuple(sorted(s))

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        vars_ = self.vars if self.vars == other.vars else LaurentPoly.common_vars(self, other)
        out = dict(self.extend(vars_))
        for e, c in other.extend(vars_).items():
            s = out.get(e, 0) + c
            if s:
                out[e] = norm_coef(s)
            else:
                out.pop(e, None)
        return LaurentPoly._raw(vars_, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return LaurentPoly._raw((), {})
        if not other.vars:
            c = other.terms[()]
            if c == 1:
                return self
            return LaurentPoly._raw(self.vars, {e: norm_coef(v * c) for e, v in self.terms.items()})
        if not self.vars:
            return other * self
        vars_ = self.vars if self.vars == other.vars else LaurentPoly.common_vars(self, other)
        a = self.extend(vars_)
        b = other.extend(vars_)
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Exp, Coef] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        out = {e: norm_coef(c) for e, c in out.items() if c}
        return LaurentPoly._raw(vars_, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_monomial():
                (e, c), = self.terms.items()
                return LaurentPoly._raw(self.vars, {tuple(-x * -n for x in e): norm_coef(Fraction(1) / c ** -n)})
            raise ValueError("negative power of a non-monomial Laurent polynomial")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "LaurentPoly":
        return self * LaurentPoly.const(c)

    def mul_monomial(self, exp: Mapping[str, int], coef=1) -> "LaurentPoly":
        return self * LaurentPoly.monomial(exp, coef)

    # -- equality / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- substitution helpers ---------------------------------------------
    def rename(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        """Rename variables; two variables may be merged into one."""
        new_names = [mapping.get(v, v) for v in self.vars]
        vars_ = tuple(sorted(set(new_names)))
        pos = [vars_.index(v) for v in new_names]
        out: Dict[Exp, Coef] = {}
        for e, c in self.terms.items():
            new = [0] * len(vars_)
            for p, x in zip(pos, e):
                new[p] += x
            k = tuple(new)
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, vars_)

    def monomial_subs(self, images: Mapping[str, Mapping[str, int]], coefs: Mapping[str, Coef] | None = None) -> "LaurentPoly":
        """Substitute each variable by a monomial ``coef * prod w**k``.

        ``images[v]`` is a dict of exponents; variables not listed stay put.
        This covers q-shifts (Q -> q*Q), Q -> q**n and inversions E -> 1/E.
        """
        coefs = coefs or {}
        names = set()
        for v in self.vars:
            if v in images:
                names.update(w for w, k in images[v].items() if k)
            else:
                names.add(v)
        vars_ = tuple(sorted(names))
        idx = {w: i for i, w in enumerate(vars_)}
        rows = []
        for v in self.vars:
            row = [0] * len(vars_)
            if v in images:
                for w, k in images[v].items():
                    if k:
                        row[idx[w]] += k
            else:
                row[idx[v]] = 1
            rows.append(row)
        out: Dict[Exp, Coef] = {}
        for e, c in self.terms.items():
            new = [0] * len(vars_)
            for x, row, v in zip(e, rows, self.vars):
                if x:
                    for j, r in enumerate(row):
                        if r:
                            new[j] += x * r
                    if v in coefs:
                        c = c * Fraction(coefs[v]) ** x
            k = tuple(new)
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, vars_)

    def shift(self, v: str, base: str, k: int) -> "LaurentPoly":
        """Substitute v -> base**k * v (e.g. Q -> q*Q for the shift operator)."""
        if v not in self.vars or k == 0:
            return self
        return self.monomial_subs({v: {v: 1, base: k}})

    def evaluate(self, values: Mapping[str, Coef]) -> "LaurentPoly":
        """Substitute numeric values for some variables."""
        values = {v: Fraction(x) for v, x in values.items() if v in self.vars}
        if not values:
            return self
        keep = tuple(v for v in self.vars if v not in values)
        kpos = [self.vars.index(v) for v in keep]
        vpos = [(self.vars.index(v), x) for v, x in values.items()]
        out: Dict[Exp, Coef] = {}
        for e, c in self.terms.items():
            val = Fraction(c)
            for i, x in vpos:
                if e[i]:
                    if x == 0 and e[i] < 0:
                        raise ZeroDivisionError(f"negative power of {self.vars[i]} evaluated at 0")
                    val *= x ** e[i]
            k = tuple(e[i] for i in kpos)
            out[k] = out.get(k, 0) + val
        return LaurentPoly(out, keep)

    def derivative(self, v: str) -> "LaurentPoly":
        if v not in self.vars:
            return LaurentPoly.const(0)
        i = self.vars.index(v)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = norm_coef(c * e[i])
        return LaurentPoly._raw(self.vars, out)

    def reverse(self, v: str) -> "LaurentPoly":
        """v**deg_v(self) * self(v -> 1/v)."""
        if v not in self.vars:
            return self
        i = self.vars.index(v)
        d = self.degree(v)
        out = {e[:i] + (d - e[i],) + e[i + 1:]: c for e, c in self.terms.items()}
        return LaurentPoly._raw(self.vars, out)

    # -- monomial content ---------------------------------------------------
    def split_monomial(self) -> Tuple[Exp, "LaurentPoly"]:
        """Return (m, p) with self = x**m * p and p not divisible by any variable."""
        if not self.terms or not self.vars:
            return tuple(0 for _ in self.vars), self
        m = self.min_exponents()
        if not any(m):
            return m, self
        out = {tuple(x - y for x, y in zip(e, m)): c for e, c in self.terms.items()}
        return m, LaurentPoly._raw(self.vars, out)

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self.terms for x in e)

    # -- division -----------------------------------------------------------
    def divmod_lex(self, g: "LaurentPoly") -> Tuple["LaurentPoly", "LaurentPoly"]:
        """Multivariate division by a single divisor in lex order.

        Both arguments must be honest polynomials.  The remainder is zero iff
        ``g`` divides ``self`` in the polynomial ring over the rationals.
        """
        if not g.terms:
            raise ZeroDivisionError("division by zero polynomial")
        vars_ = LaurentPoly.common_vars(self, g)
        f = dict(self.extend(vars_))
        gt = g.extend(vars_)
        lg = max(gt)
        lc = gt[lg]
        rest = [(e, c) for e, c in gt.items() if e != lg]
        quo: Dict[Exp, Coef] = {}
        rem: Dict[Exp, Coef] = {}
        heap = [tuple(-x for x in e) for e in f]
        heapq.heapify(heap)
        while heap:
            key = heapq.heappop(heap)
            e = tuple(-x for x in key)
            c = f.pop(e, 0)
            if not c:
                continue
            while heap and heap[0] == key:
                heapq.heappop(heap)
            d = tuple(x - y for x, y in zip(e, lg))
            if all(x >= 0 for x in d):
                qc = norm_coef(Fraction(c) / lc) if not (isinstance(c, int) and isinstance(lc, int) and c % lc == 0) else c // lc
                quo[d] = qc
                for eg, cg in rest:
                    ne = tuple(x + y for x, y in zip(d, eg))
                    nv = f.get(ne, 0) - qc * cg
                    if nv:
                        if ne not in f:
                            heapq.heappush(heap, tuple(-x for x in ne))
                        f[ne] = norm_coef(nv)
                    else:
                        f.pop(ne, None)
            else:
                rem[e] = c
        return LaurentPoly._raw(vars_, quo), LaurentPoly._raw(vars_, rem)

    def divexact(self, g: "LaurentPoly") -> "LaurentPoly":
        """Exact division in the Laurent ring; raises NotDivisibleError otherwise."""
        if not g.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return self
        if g.is_monomial():
            (eg, cg), = g.terms.items()
            vars_ = LaurentPoly.common_vars(self, g)
            ge = dict(zip(g.vars, eg))
            sub = tuple(ge.get(v, 0) for v in vars_)
            out = {tuple(x - y for x, y in zip(e, sub)): norm_coef(Fraction(c) / cg) for e, c in self.extend(vars_).items()}
            return LaurentPoly._raw(vars_, out)
        mf, pf = self.split_monomial()
        mg, pg = g.split_monomial()
        q, r = pf.divmod_lex(pg)
        if r.terms:
            raise NotDivisibleError(f"{g} does not divide {self}")
        shift = {v: x for v, x in zip(self.vars, mf)}
        for v, x in zip(g.vars, mg):
            shift[v] = shift.get(v, 0) - x
        return q * LaurentPoly.monomial(shift)

    def divides(self, f: "LaurentPoly") -> bool:
        """True iff self divides f in the Laurent polynomial ring."""
        try:
            f.divexact(self)
        except NotDivisibleError:
            return False
        return True

    # -- printing -----------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"


def _fmt_monomial(vars_, e) -> str:
    parts = []
    for v, x in zip(vars_, e):
        if x == 1:
            parts.append(v)
        elif x:
            parts.append(f"{v}^{x}" if x > 0 else f"{v}^({x})")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Human-readable string, terms in descending canonical order."""
    if not p.terms:
        return "0"
    out = []
    for e, c in sorted(p.terms.items(), reverse=True):
        mono = _fmt_monomial(p.vars, e)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- parsing ---------------------------------------------------------------

def _parse_node(node):
    from .ratfunc import RationalFunction  # local import: parser may build quotients

    if isinstance(node, ast.Expression):
        return _parse_node(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return LaurentPoly.const(node.value)
    if isinstance(node, ast.Name):
        return LaurentPoly.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _parse_node(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        a = _parse_node(node.left)
        if isinstance(node.op, (ast.Pow, ast.BitXor)):
            exp = node.right
            sign = 1
            if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                sign, exp = -1, exp.operand
            if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                raise ValueError("exponents must be integer literals")
            n = sign * exp.value
            if n < 0:
                if isinstance(a, LaurentPoly) and a.is_monomial():
                    return a ** n
                return RationalFunction.coerce(a) ** n
            return a ** n
        b = _parse_node(node.right)
        if isinstance(node.op, ast.Add):
            return _lift(a, b, lambda x, y: x + y)
        if isinstance(node.op, ast.Sub):
            return _lift(a, b, lambda x, y: x - y)
        if isinstance(node.op, ast.Mult):
            return _lift(a, b, lambda x, y: x * y)
        if isinstance(node.op, ast.Div):
            return RationalFunction.coerce(a) / RationalFunction.coerce(b)
    raise ValueError(f"unsupported expression: {ast.dump(node)}")


def _lift(a, b, op):
    from .ratfunc import RationalFunction

    if isinstance(a, LaurentPoly) and isinstance(b, LaurentPoly):
        return op(a, b)
    return op(RationalFunction.coerce(a), RationalFunction.coerce(b))


def parse(text: str):
    """Parse ``"E + q^2*Q"``-style text into a LaurentPoly or RationalFunction.

    Both ``^`` and ``**`` denote powers; juxtaposition is not supported.
    """
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    return _parse_node(tree)


def poly(text: str) -> LaurentPoly:
    """Parse text that must denote a Laurent polynomial."""
    p = parse(text)
    if isinstance(p, LaurentPoly):
        return p
    if not p.is_polynomial():
        raise ValueError(f"{text!r} is not a Laurent polynomial")
    return p.as_poly()


def var(name: str) -> LaurentPoly:
    return LaurentPoly.var(name)
