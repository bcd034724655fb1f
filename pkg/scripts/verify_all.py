#!/usr/bin/env python3
"""Run the full verification catalog and print a one-line status per table.

Equivalent to `nestcone verify --all`; exits nonzero on any diff.
"""

import sys

import nestcone as nc


def main() -> int:
    failed = 0
    for table_id in sorted(nc.CATALOG):
        report = nc.reproduce_table(table_id)
        cells = sum(len(s.cells) for s in report.sections)
        skipped = sum(
            1 for s in report.sections for c in s.cells if c.status == "skipped"
        )
        status = "OK" if report.ok else "FAIL"
        extra = f", {skipped} skipped" if skipped else ""
        print(f"{table_id}: {status} ({cells} cells{extra})")
        if not report.ok:
            failed += 1
            print(report.text(), file=sys.stderr)
    print(f"\n{len(nc.CATALOG) - failed}/{len(nc.CATALOG)} tables verified")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
