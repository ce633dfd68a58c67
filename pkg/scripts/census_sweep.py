#!/usr/bin/env python3
"""Self-duality census over a range of degrees, with timings.

The n = 10 census enumerates 3,628,800 permutations and takes minutes;
enable it with --long.
"""

import argparse
import os
import time

from odd_diagrams.classes import classes_of_sn
from odd_diagrams.duality import non_self_dual_census


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=2)
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--long", action="store_true", help="allow n = 10")
    parser.add_argument("--jobs", type=int, default=0, help="workers (0 = all cores)")
    args = parser.parse_args()

    jobs = args.jobs or os.cpu_count() or 1
    top = min(args.max_n, 10 if args.long else 9)
    for n in range(args.min_n, top + 1):
        start = time.perf_counter()
        total = len(classes_of_sn(n))
        bad = non_self_dual_census(n, jobs=jobs)
        print(
            f"n={n}: classes={total} non_self_dual={bad} "
            f"({time.perf_counter() - start:.1f}s)"
        )


if __name__ == "__main__":
    main()
