"""Write the coefficient tables of C_p for the reference p values as LaTeX and plain matrices."""

import argparse
from pathlib import Path

from qknot.appendix import REFERENCE_ORDER, latex_table, matrix_text


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", type=Path)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for p in REFERENCE_ORDER:
        (args.outdir / f"C_{p}.tex").write_text(latex_table(p) + "\n")
        (args.outdir / f"C_{p}.txt").write_text(matrix_text(p) + "\n")
        print(f"wrote C_{p}")


if __name__ == "__main__":
    main()
