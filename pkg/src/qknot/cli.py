"""Command-line interface: ``python -m qknot <verb> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .acurve import a_candidate
from .appendix import REFERENCE_ORDER, latex_table, matrix_text
from .cpoly import cpoly_closed, nc_cpoly
from .cyclotomic import colored_jones_twist, cyclotomic_twist
from .serialize import dumps, poly_to_obj, ratfunc_from_obj, to_obj
from .suites import SUITES, run_suite
from .telescope import (HGTerm, NotFound, binomial_term, celine_solve, twist_certificate,
                        twist_term, verify_certificate)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qknot", description="q-difference equations of twist knots")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("cyclotomic", help="cyclotomic function J^_p(n)")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--text", action="store_true", help="sorted monomial string instead of JSON")

    j = sub.add_parser("jones", help="colored Jones function J_p(n), n >= 1")
    j.add_argument("-p", type=int, required=True)
    j.add_argument("-n", type=int, required=True)
    j.add_argument("--text", action="store_true")

    cp = sub.add_parser("cpoly", help="C-polynomial of K_p")
    cp.add_argument("-p", type=int, required=True)
    kind = cp.add_mutually_exclusive_group()
    kind.add_argument("--nc", action="store_true", help="non-commutative C_p(E, Q, q)")
    kind.add_argument("--commutative", action="store_true", help="C_p(E, Q) (default)")
    cp.add_argument("--format", choices=("json", "latex", "matrix"), default="json")

    a = sub.add_parser("apoly", help="A^_p(L, M) = phi(C_p^op) / factor")
    a.add_argument("-p", type=int, required=True)

    t = sub.add_parser("telescope", help="Celine ansatz or certificate check")
    t.add_argument("--term", required=True,
                   help="twist:P, qbinomial, or JSON {\"ratio_n\": ..., \"ratio_k\": ...}")
    t.add_argument("--order", type=int, default=1, help="n-shift bound I")
    t.add_argument("--kdeg", type=int, default=1, help="k-shift bound J")
    t.add_argument("--verify-only", action="store_true",
                   help="check the built-in certificate of twist:P instead of solving")
    t.add_argument("--method", choices=("modular", "bareiss"), default="modular")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")

    tb = sub.add_parser("table", help="coefficient tables")
    tb.add_argument("--appendix", action="store_true", required=True)
    tb.add_argument("--format", choices=("latex", "matrix"), default="latex")
    return ap


def parse_term(spec: str) -> HGTerm:
    if spec.startswith("twist:"):
        try:
            return twist_term(int(spec.split(":", 1)[1]))
        except ValueError as exc:
            raise UsageError(f"bad twist parameter in {spec!r}") from exc
    if spec == "qbinomial":
        return binomial_term()
    try:
        obj = json.loads(spec)
        t = HGTerm(ratfunc_from_obj(obj["ratio_n"]), ratfunc_from_obj(obj["ratio_k"]), name="json")
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read term {spec!r}: {exc}") from exc
    if not t.compatible():
        raise UsageError("the two ratios are not shift-compatible")
    return t


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _telescope(args, out) -> int:
    t = parse_term(args.term)
    if args.verify_only:
        if not t.name.startswith("twist:") or int(t.name.split(":")[1]) <= 0:
            raise UsageError("--verify-only needs a twist:P term with P > 0")
        p = int(t.name.split(":")[1])
        ok = verify_certificate(t, twist_certificate(p))
        _emit({"term": t.name, "certificate": ok}, out)
        return EXIT_OK if ok else EXIT_FAIL
    if args.order < 0 or args.kdeg < 0:
        raise UsageError("--order and --kdeg must be nonnegative")
    sol = celine_solve(t, args.order, args.kdeg, args.method)
    if isinstance(sol, NotFound):
        _emit({"term": t.name, "order": args.order, "kdeg": args.kdeg, "found": False,
               "reason": sol.reason}, out)
        return EXIT_FAIL
    _emit({"term": t.name, "order": args.order, "kdeg": args.kdeg, "found": True,
           "operator": to_obj(sol.operator()),
           "coefficients": [{"i": i, "j": j, "a": to_obj(c)} for (i, j), c in sorted(sol.a.items())]}, out)
    return EXIT_OK


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.verb == "cyclotomic":
            f = cyclotomic_twist(args.p, args.n)
            out.write((str(f) if args.text else dumps(f)) + "\n")
        elif args.verb == "jones":
            if args.n < 1:
                raise UsageError("jones needs n >= 1")
            f = colored_jones_twist(args.p, args.n)
            out.write((str(f) if args.text else dumps(f)) + "\n")
        elif args.verb == "cpoly":
            if args.format == "json":
                value = nc_cpoly(args.p).op.to_poly() if args.nc else cpoly_closed(args.p).poly
                out.write(dumps(value) + "\n")
            elif not args.nc:
                raise UsageError("latex and matrix formats show the non-commutative table; add --nc")
            elif args.format == "latex":
                out.write(latex_table(args.p) + "\n")
            else:
                out.write(matrix_text(args.p) + "\n")
        elif args.verb == "apoly":
            _emit(poly_to_obj(a_candidate(args.p).poly), out)
        elif args.verb == "telescope":
            return _telescope(args, out)
        elif args.verb == "verify":
            reports = run_suite(args.suite)
            for rep in reports:
                out.write("\n".join(rep.lines(args.verbose)) + "\n")
            return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL
        elif args.verb == "table":
            render = latex_table if args.format == "latex" else matrix_text
            out.write("\n\n".join(render(p) for p in REFERENCE_ORDER) + "\n")
        return EXIT_OK
    except UsageError as exc:
        sys.stderr.write(f"qknot: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
