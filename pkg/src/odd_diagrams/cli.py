"""Command-line harness: diagrams, classes, polynomials, censuses, checks."""

import argparse
import json
import os
import sys

from . import classes as classes_mod
from . import diagrams, duality, intervals, partition, perms, polynomials, verify

USAGE_ERROR = 2
CHECK_FAILURE = 1


def _perm(text: str) -> perms.Perm:
    return perms.parse_perm(text)


def _interval_args(args) -> tuple[perms.Perm, perms.Perm]:
    u, v = (_perm(t) for t in args.interval)
    return u, v


def cmd_diagram(args) -> int:
    w = _perm(args.perm)
    print(diagrams.render_diagrams(w))
    return 0


def cmd_class(args) -> int:
    w = _perm(args.perm)
    cls = classes_mod.class_of(w)
    interval = intervals.interval_elements(cls.min_elem, cls.max_elem)
    print(f"min: {perms.format_perm(cls.min_elem)}")
    print(f"max: {perms.format_perm(cls.max_elem)}")
    print(f"size: {len(cls.members)}")
    print(f"rank_vector: {list(intervals.rank_vector(interval))}")
    print("members: " + " ".join(perms.format_perm(x) for x in cls.members))
    return 0


def cmd_poincare(args) -> int:
    u, v = _interval_args(args)
    print(polynomials.poincare(u, v).pretty("t"))
    return 0


def cmd_factorize(args) -> int:
    u, v = _interval_args(args)
    result = partition.factorize(u, v)
    print(f"{list(result.factor_lengths)} = {result.product.pretty('t')}")
    return 0


def _highlight(w: perms.Perm, positions) -> str:
    marked = set(positions)
    parts = []
    for i, x in enumerate(w, start=1):
        text = str(x)
        parts.append(f"[{text}]" if i in marked else text)
    sep = "," if len(w) > 9 else ""
    return sep.join(parts)


def cmd_partition(args) -> int:
    u, v = _interval_args(args)
    decomp = partition.decompose(u, v)
    step = decomp.step
    print(f"k={step.k} a={step.a} b={step.b} anchors={list(step.anchors)} m={step.m}")
    print("u_chain: " + " ".join(_highlight(w, step.anchors) for w in decomp.u_chain))
    print("v_chain: " + " ".join(_highlight(w, step.anchors) for w in decomp.v_chain))
    for i, block in enumerate(decomp.blocks, start=1):
        members = " ".join(perms.format_perm(w) for w in block.elements)
        print(f"block {i} [{perms.format_perm(block.bottom)}, "
              f"{perms.format_perm(block.top)}]: {members}")
    return 0


def cmd_kl(args) -> int:
    x, y = _perm(args.x), _perm(args.y)
    print(polynomials.kl_polynomial(x, y).pretty("q"))
    return 0


def cmd_rpoly(args) -> int:
    x, y = _perm(args.x), _perm(args.y)
    print(polynomials.r_polynomial(x, y).pretty("q"))
    return 0


def cmd_hasse(args) -> int:
    u, v = _interval_args(args)
    interval = intervals.interval_elements(u, v)
    dot = intervals.to_dot(interval)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot + "\n")
        print(f"wrote {args.dot} ({len(interval)} nodes)")
    else:
        print(dot)
    return 0


def cmd_classes(args) -> int:
    report = classes_mod.report_for_n(args.n, allow_large=args.long)
    if args.out:
        classes_mod.dump_report(report, args.out)
        print(f"wrote {args.out} ({len(report['classes'])} classes)")
    else:
        json.dump(report, sys.stdout, indent=1)
        print()
    return 0


def cmd_census(args) -> int:
    if args.n >= 10 and not args.long:
        print("census at n >= 10 requires --long", file=sys.stderr)
        return USAGE_ERROR
    jobs = args.jobs or os.cpu_count() or 1
    all_classes = classes_mod.classes_of_sn(args.n)
    bad = duality.non_self_dual_census(args.n, jobs=jobs)
    print(f"classes: {len(all_classes)}, non-self-dual: {bad}")
    if args.list and bad:
        for cls in all_classes:
            interval = intervals.BruhatInterval(cls.min_elem, cls.max_elem, cls.members)
            if len(cls.members) > 1 and not duality.is_self_dual(interval):
                print(f"  [{perms.format_perm(cls.min_elem)}, "
                      f"{perms.format_perm(cls.max_elem)}]")
    return 0


def cmd_verify(args) -> int:
    names = args.checks.split(",") if args.checks else None
    limit = 6 if args.long else 5
    if args.n > limit and names is None:
        # the full default battery is exhaustive over S_n x S_n pairs; keep
        # it desk-scale unless the caller narrows the check list
        print(
            f"verify --n {args.n} with the full check battery is long-running; "
            "pass --checks to narrow it or --long to proceed",
            file=sys.stderr,
        )
        if not args.long:
            return USAGE_ERROR
    report = verify.run_checks(args.n, names, seed=args.seed, jobs=args.jobs or 1)
    for check in report.checks:
        status = "ok" if check.failed == 0 else "FAIL"
        line = (f"{check.name:34s} {status:4s} passed={check.passed} "
                f"failed={check.failed} scope={check.scope}")
        if check.findings:
            line += f" findings={len(check.findings)}"
        print(line)
    print(f"wall_time: {report.wall_time:.2f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report.to_json(), fh, indent=1)
            fh.write("\n")
    return 0 if report.ok else CHECK_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="odd-diagrams",
        description="Odd diagrams, Bruhat intervals, and Poincare factorization",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagram", help="ASCII Rothe/odd diagram of a permutation")
    p.add_argument("--perm", required=True)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("class", help="odd diagram class of a permutation")
    p.add_argument("--perm", required=True)
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("poincare", help="Poincare polynomial of [u, v]")
    p.add_argument("--interval", nargs=2, required=True, metavar=("U", "V"))
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("factorize", help="factor the Poincare polynomial of a class")
    p.add_argument("--interval", nargs=2, required=True, metavar=("U", "V"))
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("partition", help="uniform partition of a class")
    p.add_argument("--interval", nargs=2, required=True, metavar=("U", "V"))
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomial P_{x,y}")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("rpoly", help="R-polynomial R_{x,y}")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_rpoly)

    p = sub.add_parser("hasse", help="DOT Hasse diagram of [u, v]")
    p.add_argument("--interval", nargs=2, required=True, metavar=("U", "V"))
    p.add_argument("--dot", help="output path (default: stdout)")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("classes", help="JSON report of all classes of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="output path PATH.json (default: stdout)")
    p.add_argument("--long", action="store_true", help="allow long-running sizes")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("census", help="non-self-dual class census of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--long", action="store_true", help="allow long-running sizes")
    p.add_argument("--list", action="store_true", help="list non-self-dual classes")
    p.add_argument("--jobs", type=int, default=0, help="worker count (0 = all cores)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run theorem-backed verification checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--checks", help="comma-separated check names (default: all)")
    p.add_argument("--long", action="store_true", help="allow long-running sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=0, help="worker count (0 = 1)")
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
