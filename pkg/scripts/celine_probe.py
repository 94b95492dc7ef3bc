"""Find the smallest Celine ansatz (I, J) for the twist summand and compare with C_p."""

import argparse
import time

from qknot.cpoly import nc_cpoly
from qknot.qweyl import right_divmod
from qknot.telescope import celine_solve, twist_term


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-p", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--max-order", type=int, default=6)
    ap.add_argument("--kdeg", type=int, default=2)
    args = ap.parse_args()
    for p in args.p:
        t = twist_term(p)
        for i in range(args.max_order + 1):
            t0 = time.perf_counter()
            sol = celine_solve(t, i, args.kdeg)
            dt = time.perf_counter() - t0
            if not sol:
                print(f"p={p} (I,J)=({i},{args.kdeg}): none ({dt:.1f}s)")
                continue
            op = sol.operator()
            _, rem = right_divmod(op, nc_cpoly(p).op)
            print(f"p={p} (I,J)=({i},{args.kdeg}): order {op.degree()}, "
                  f"left multiple of C_{p}: {rem.is_zero()} ({dt:.1f}s)")
            break


if __name__ == "__main__":
    main()
