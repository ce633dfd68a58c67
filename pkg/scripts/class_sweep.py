#!/usr/bin/env python3
"""Write JSON class reports for a range of symmetric group degrees.

Example:
    python3 scripts/class_sweep.py --max-n 6 --out-dir reports/
"""

import argparse
import pathlib
import time

from odd_diagrams.classes import dump_report, report_for_n


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=1)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--out-dir", default="reports")
    parser.add_argument("--long", action="store_true", help="allow n up to 10")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for n in range(args.min_n, args.max_n + 1):
        start = time.perf_counter()
        report = report_for_n(n, allow_large=args.long)
        path = out_dir / f"classes_s{n}.json"
        dump_report(report, str(path))
        print(
            f"n={n}: {len(report['classes'])} classes -> {path} "
            f"({time.perf_counter() - start:.1f}s)"
        )


if __name__ == "__main__":
    main()
