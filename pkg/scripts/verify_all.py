"""Run every verification suite and print a timing summary."""

import sys

from qknot.suites import run_suite


def main() -> int:
    reports = run_suite("all")
    for rep in reports:
        print("\n".join(rep.lines()))
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
