"""Canonical JSON for polynomials, rational functions and operators.

    {"vars": ["E", "Q", "q"], "terms": [{"exp": [1, 0, 2], "coef": "3/2"}]}

Variables are sorted by name and terms by exponent vector, so equal values
serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List

from .poly import LaurentPoly
from .qweyl import WeylOp
from .ratfunc import RationalFunction


def _coef_text(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_to_obj(p) -> Dict[str, Any]:
    p = LaurentPoly.coerce(p)
    return {
        "vars": list(p.vars),
        "terms": [{"exp": list(e), "coef": _coef_text(c)} for e, c in sorted(p.terms.items())],
    }


def poly_from_obj(obj: Dict[str, Any]) -> LaurentPoly:
    vars_ = tuple(obj["vars"])
    terms = {}
    for t in obj["terms"]:
        exp = tuple(int(x) for x in t["exp"])
        if len(exp) != len(vars_):
            raise ValueError(f"exponent {exp} does not match variables {vars_}")
        terms[exp] = Fraction(t["coef"])
    return LaurentPoly(terms, vars_)


def ratfunc_to_obj(r) -> Dict[str, Any]:
    r = RationalFunction.coerce(r)
    return {"num": poly_to_obj(r.num), "den": poly_to_obj(r.den)}


def ratfunc_from_obj(obj: Dict[str, Any]) -> RationalFunction:
    if "terms" in obj:
        return RationalFunction(poly_from_obj(obj))
    return RationalFunction(poly_from_obj(obj["num"]), poly_from_obj(obj["den"]))


def op_to_obj(op: WeylOp) -> List[Dict[str, Any]]:
    return [{"e_degree": j, "coefficient": ratfunc_to_obj(c)} for j, c in sorted(op.coeffs.items())]


def op_from_obj(obj: List[Dict[str, Any]]) -> WeylOp:
    return WeylOp({int(t["e_degree"]): ratfunc_from_obj(t["coefficient"]) for t in obj})


def to_obj(x) -> Any:
    if isinstance(x, WeylOp):
        return op_to_obj(x)
    if isinstance(x, RationalFunction):
        if x.is_polynomial():
            return poly_to_obj(x.as_poly())
        return ratfunc_to_obj(x)
    return poly_to_obj(x)


def dumps(x) -> str:
    return json.dumps(to_obj(x), separators=(",", ":"))
