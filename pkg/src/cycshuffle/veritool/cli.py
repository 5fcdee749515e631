"""Command-line front end: ``cycshuffle {stats,shuffles,table,verify}``."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .. import theorems
from ..errors import DisjointnessError, DomainError, ResourceGuardError
from ..permcore import (
    cyclic_descent_number,
    cyclic_major_index,
    descent_number,
    major_index,
    parse_cyclic,
    parse_perm,
    stat_summary,
)
from ..qpoly import ZERO
from ..shuffle import cyclic_shuffles, linear_shuffles
from .report import render
from .sweep import THEOREMS, SweepConfig, run_sweep

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3
EXIT_DISJOINT = 4
EXIT_RESOURCE = 5


def _fmt_set(xs) -> str:
    return "{" + ",".join(map(str, sorted(xs))) + "}"


def cmd_stats(args, out) -> int:
    if args.cyclic:
        cp = parse_cyclic(args.perm)
        st = stat_summary(cp)
        print(f"class={cp}", file=out)
        print(f"cdes_set={_fmt_set(st.cdes_set)}", file=out)
        print(f"cdes={st.cdes}", file=out)
        print(f"cmaj={cyclic_major_index(cp)}", file=out)
        print(f"cbd={_fmt_set(st.cbd)}", file=out)
        return EXIT_OK
    p = parse_perm(args.perm)
    st = stat_summary(p)
    print(f"perm={p}", file=out)
    print(f"des_set={_fmt_set(st.des_set)}", file=out)
    print(f"des={st.des}", file=out)
    print(f"maj={st.maj}", file=out)
    print(f"cdes_set={_fmt_set(st.cdes_set)}", file=out)
    print(f"cdes={st.cdes}", file=out)
    print(f"cbd={_fmt_set(st.cbd)}", file=out)
    return EXIT_OK


def cmd_shuffles(args, out) -> int:
    if args.cyclic:
        a, b = parse_cyclic(args.sigma), parse_cyclic(args.pi)
        for alpha in cyclic_shuffles(a, b):
            print(f"{alpha}\tcdes={cyclic_descent_number(alpha)}\tcmaj={cyclic_major_index(alpha)}",
                  file=out)
        return EXIT_OK
    a, b = parse_perm(args.sigma), parse_perm(args.pi)
    for alpha in linear_shuffles(a, b):
        print(f"{alpha}\tdes={descent_number(alpha)}\tmaj={major_index(alpha)}", file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.cyclic:
        a, b = parse_cyclic(args.sigma), parse_cyclic(args.pi)
        pair = theorems.CyclicShufflePair.normalized(a, b)
        lhs = theorems.cyclic_shuffle_maj_gfs(a, b)
        rhs = {k: theorems.cyclic_stanley_rhs(pair, k) for k in range(len(a) + len(b))}
    else:
        a, b = parse_perm(args.sigma), parse_perm(args.pi)
        lhs = theorems.shuffle_maj_gfs(a, b)
        rhs = {k: theorems.stanley_rhs(a, b, k) for k in range(len(a) + len(b))}
    all_match = True
    print("k\tlhs\trhs\tmatch", file=out)
    for k in sorted(set(lhs) | set(rhs)):
        left, right = lhs.get(k, ZERO), rhs.get(k, ZERO)
        if not left and not right:
            continue
        match = left == right
        all_match &= match
        print(f"{k}\t{left}\t{right}\t{'yes' if match else 'NO'}", file=out)
    return EXIT_OK if all_match else EXIT_FAILURES


def _theorem_list(text: str) -> tuple[str, ...]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if names == ["all"]:
        return THEOREMS
    bad = [t for t in names if t not in THEOREMS]
    if bad or not names:
        raise argparse.ArgumentTypeError(
            f"unknown theorem(s) {bad}; choose from {', '.join(THEOREMS)} or 'all'"
        )
    return tuple(names)


def cmd_verify(args, out) -> int:
    sample = None if args.sample is None else (args.sample, args.seed)
    try:
        config = SweepConfig(
            max_total=args.max_total,
            oracle_bound=args.oracle_bound,
            theorems=args.theorems,
            sample=sample,
            sample_total=args.sample_total,
            output_format=args.format,
            jobs=args.jobs,
        )
    except ValueError as exc:
        print(f"error: invalid sweep configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = run_sweep(config)
    text = render(report, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK if report.ok else EXIT_FAILURES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycshuffle",
        description="Statistics, shuffles and exhaustive checks of the (cyclic) shuffle theorems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="descent statistics of one permutation")
    p.add_argument("perm", help="comma-separated letters, e.g. 4,1,3,2")
    p.add_argument("--cyclic", action="store_true", help="treat the word as a rotation class")
    p.set_defaults(func=cmd_stats)

    for name, func, helptext in (
        ("shuffles", cmd_shuffles, "list all shuffles with their statistics"),
        ("table", cmd_table, "per-k brute force vs closed form"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--sigma", required=True)
        p.add_argument("--pi", required=True)
        p.add_argument("--cyclic", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p.add_argument("--theorems", type=_theorem_list, default=THEOREMS,
                   help="comma-separated subset of " + ",".join(THEOREMS) + ", or 'all'")
    p.add_argument("--max-total", type=int, default=8, help="largest m+n swept exhaustively")
    p.add_argument("--oracle-bound", type=int, default=None,
                   help="largest m+n for which the exhaustive cyclic-shuffle oracle is used")
    p.add_argument("--sample", type=int, default=None, metavar="COUNT",
                   help="additionally check COUNT random pairs above max-total")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample-total", type=int, default=None,
                   help="m+n of sampled pairs (default max-total + 2)")
    p.add_argument("--format", choices=("json", "tsv", "text"), default="text")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except DisjointnessError as exc:
        print(f"error: operands are not disjoint: {exc}", file=sys.stderr)
        return EXIT_DISJOINT
    except DomainError as exc:
        print(f"error: malformed permutation: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ResourceGuardError as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
