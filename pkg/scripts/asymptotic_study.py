#!/usr/bin/env python3
"""Asymptotic effective-cone study: nesting, exact deviations, and
convergence of cross-sections to the limit square.

Usage: asymptotic_study.py [k_max]
"""

import sys

import nestcone as nc


def main() -> int:
    k_max = int(sys.argv[1]) if len(sys.argv) > 1 else 30
    report = nc.asymptotic_report(k_max)
    print(report.text(), end="")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
