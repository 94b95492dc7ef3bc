"""Reference coefficient tables of C_p(E, Q, q) for p = -3..3 and their emission.

The reference tables are kept verbatim in LaTeX matrix form and parsed at
import time.  Reading them requires three corrections, applied explicitly
in :func:`reference_table`:

* the third table is labelled ``C_2`` but has E-degree 3; it is C_3;
* the single column of the C_{-1} table is headed ``Q^1``; the entries
  (-1 and the monic 1) belong to Q^0;
* for p < 0 the monic entry 1 of the top row E^|p| is printed in the first
  column; it belongs to Q^0.
"""

from __future__ import annotations

import re
from typing import Dict, List, Tuple

from .cpoly import nc_cpoly
from .poly import LaurentPoly, poly

Cell = Tuple[int, int]
Table = Dict[Cell, LaurentPoly]

REFERENCE_LATEX = r"""
\mat
{
C_1 & Q^0 & Q^1 \\      \hline
E^0 & 0 & q^2 \\
E^1 & 1 & 0 
}

\mat
{
C_2 & Q^0 & Q^1 & Q^2 & Q^3  \\ \hline
E^0 & 0 & 0 & q^6 & -q^7 \\
E^1 & 0 & q^3+q^4 & -q^5 & q^7 \\
E^2 & 1 & 0 & 0 & 0 
}

\mat
{
C_2 & Q^0 & Q^1 & Q^2 & Q^3 & Q^4 & Q^5  \\     \hline
E^0 & 0 & 0 & 0 & q^{12} & -q^{13}-q^{14} & q^{15} \\
E^1 & 0 & 0 & q^8 + q^9 + q^{10} & -q^{10}-2 q^{11} -q^{12} & 2 q^{13}+q^{14}
& -q^{15}-q^{16} \\
E^2 & 0 & q^4 +q^5+q^6 & -q^7-q^8 & q^{10}+q^{11} & -q^{13} & q^{16} \\
E^3 & 1 & 0 & 0 & 0 & 0 & 0
}

\mat{
C_{-1} & Q^1 \\ \hline 
E^0  & -1 \\
E^1 & 1
}

\mat{
C_{-2} & Q^{-2} & Q^{-1} & Q^0 \\       \hline 
E^0 & 0 & -q^{-2} & q^{-1} \\
E^1 & -q^{-4} & q^{-2} & -q^{-1}-1 \\
E^2 & 1 & 0 & 0
}

\mat{
C_{-3}  & Q^{-4} & Q^{-3} & Q^{-2} & Q^{-1} & Q^0 \\    \hline 
E^0 &  0 & 0 & -q^{-6} & q^{-5} + q^{-4} & -q^{-3} \\
E^1 &  0 & -q^{-9} -q^{-8} & q^{-7} + 2 q^{-6} & -q^{-5}-2 q^{-4}-q^{-3} &
q^{-3}+q^{-2}+q^{-1} \\
E^2 & -q^{-12} & q^{-9} & -q^{-7} -q^{-6} & q^{-4}+q^{-3} & -q^{-2}-q^{-1}-1\\
E^3 & 1 & 0 & 0 & 0 & 0
}
"""

# order in which the tables appear, after reading the mislabelled C_2 as C_3
REFERENCE_ORDER = (1, 2, 3, -1, -2, -3)


class TableMismatch(AssertionError):
    """A computed table differs from the reference table."""


def split_blocks(text: str) -> List[str]:
    """Return the bodies of all ``\\mat{...}`` blocks, braces matched."""
    out = []
    i = 0
    while True:
        i = text.find("\\mat", i)
        if i < 0:
            return out
        j = text.index("{", i)
        depth = 0
        for k in range(j, len(text)):
            if text[k] == "{":
                depth += 1
            elif text[k] == "}":
                depth -= 1
                if depth == 0:
                    break
        out.append(text[j + 1:k])
        i = k + 1


def parse_cell(text: str) -> LaurentPoly:
    """Parse a LaTeX cell such as ``-q^{10}-2 q^{11} -q^{12}``."""
    s = text.replace("{", "(").replace("}", ")").strip()
    s = re.sub(r"(\d)\s*q", r"\1*q", s)
    return poly(s) if s else LaurentPoly.const(0)


def _exponent(label: str) -> int:
    m = re.fullmatch(r"[A-Za-z]_?\^?\{?(-?\d+)\}?", label.strip())
    if not m:
        raise ValueError(f"cannot read an exponent from {label!r}")
    return int(m.group(1))


def parse_block(body: str):
    """Return (label, column exponents, {(i, j): cell}) for one matrix body."""
    rows = [r.strip() for r in body.split("\\\\")]
    header = [c.strip() for c in rows[0].split("&")]
    label = header[0]
    cols = [_exponent(c) for c in header[1:]]
    table: Table = {}
    for row in rows[1:]:
        row = row.replace("\\hline", "").strip()
        if not row:
            continue
        cells = [c.strip() for c in row.split("&")]
        i = _exponent(cells[0])
        if len(cells) - 1 != len(cols):
            raise ValueError(f"row {cells[0]} of {label} has {len(cells) - 1} cells for {len(cols)} columns")
        for j, cell in zip(cols, cells[1:]):
            v = parse_cell(cell)
            if not v.is_zero():
                table[(i, j)] = v
    return label, cols, table


def reference_table(p: int) -> Table:
    """Reference coefficients {(E-power, Q-power): q-polynomial}, corrected."""
    if p not in REFERENCE_ORDER:
        raise KeyError(f"no reference table for p = {p}")
    body = split_blocks(REFERENCE_LATEX)[REFERENCE_ORDER.index(p)]
    _, cols, table = parse_block(body)
    out: Table = {}
    top = abs(p)
    for (i, j), v in table.items():
        if p == -1:
            j = 0
        elif p < 0 and i == top and j == cols[0]:
            j = 0
        out[(i, j)] = v
    return out


def coefficient_table(p: int) -> Table:
    """{(i, j): coefficient of Q^j E^i in C_p(E, Q, q)} as polynomials in q."""
    out: Table = {}
    for i, c in nc_cpoly(p).op.coeffs.items():
        for j, cq in c.as_poly().coefficients_in("Q").items():
            out[(i, j)] = cq
    return out


def compare_table(p: int) -> None:
    """Raise TableMismatch naming the first differing cell."""
    ref = reference_table(p)
    got = coefficient_table(p)
    zero = LaurentPoly.const(0)
    for cell in sorted(set(ref) | set(got)):
        a, b = ref.get(cell, zero), got.get(cell, zero)
        if a != b:
            i, j = cell
            raise TableMismatch(f"C_{p}: cell E^{i} Q^{j} is {b}, reference has {a}")


def appendix_table(p: int) -> Table:
    """Coefficient table of C_p, checked against the reference when |p| <= 3."""
    if p in REFERENCE_ORDER:
        compare_table(p)
    return coefficient_table(p)


# -- emission -------------------------------------------------------------------------

def _sup(x: int) -> str:
    return str(x) if 0 <= x <= 9 else "{%d}" % x


def latex_qpoly(f: LaurentPoly) -> str:
    """Ascending q-powers: ``q^3+q^4``, ``-q^{-1}-1``, ``2 q^{11}``."""
    if f.is_zero():
        return "0"
    out = []
    for e, c in sorted(f.terms.items()):
        x = e[0] if e else 0
        mono = "" if x == 0 else ("q" if x == 1 else "q^" + _sup(x))
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a} {mono}")
        sign = "-" if c < 0 else ("+" if out else "")
        out.append(sign + body)
    return "".join(out)


def _columns(table: Table, p: int) -> List[int]:
    js = [j for (_, j) in table] + [0]
    return list(range(min(js), max(js) + 1))


def latex_table(p: int) -> str:
    """The coefficient table as a LaTeX ``\\mat`` block."""
    table = coefficient_table(p)
    cols = _columns(table, p)
    zero = LaurentPoly.const(0)
    head = " & ".join([f"C_{_sup(p)}"] + [f"Q^{_sup(j)}" for j in cols])
    lines = [head + " \\\\ \\hline"]
    rows = []
    for i in range(abs(p) + 1):
        cells = [latex_qpoly(table.get((i, j), zero)) for j in cols]
        rows.append(" & ".join([f"E^{_sup(i)}"] + cells))
    lines.append(" \\\\\n".join(rows))
    return "\\mat\n{\n" + "\n".join(lines) + "\n}"


def matrix_text(p: int) -> str:
    """Plain-text grid: one row per E-power, one column per Q-power."""
    table = coefficient_table(p)
    cols = _columns(table, p)
    zero = LaurentPoly.const(0)
    grid = [[f"C_{p}"] + [f"Q^{j}" for j in cols]]
    for i in range(abs(p) + 1):
        grid.append([f"E^{i}"] + [str(table.get((i, j), zero)) for j in cols])
    widths = [max(len(r[c]) for r in grid) for c in range(len(grid[0]))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in grid)


def strip_ws(text: str) -> str:
    return re.sub(r"\s+", "", text)
