"""Command line entry point: gen | verify | bench | report."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .bench import bench_campaign
from .campaign import Campaign, parse_sizes
from .generate import generate_files
from .report import report
from .verify import verify_campaign


def _add_campaign_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=0, help="campaign seed (64-bit)")
    sub.add_argument("--trials", type=int, default=5, help="trials per target and size")
    sub.add_argument("--sizes", type=str, default="4x4x4,8x8x4,16x16x4",
                     help="comma-separated n1xn2xn3 triples")
    sub.add_argument("--density", type=str, default="1/2",
                     help="bit density of matrices and vectors, as p/q")
    sub.add_argument("--targets", type=str, default="",
                     help="comma-separated gadget/engine names (default: all)")
    sub.add_argument("--undo-mode", choices=["undo", "snapshot"], default="undo")
    sub.add_argument("--epsilon", type=str, default="1", help="approximation knob, as p/q")
    sub.add_argument("--delta", type=str, default="1/2", help="trade-off knob, as p/q")
    sub.add_argument("--out", type=str, default="", help="output path")


def _campaign_from_args(args: argparse.Namespace) -> Campaign:
    targets = tuple(t.strip() for t in args.targets.split(",") if t.strip())
    return Campaign(
        seed=args.seed,
        trials=args.trials,
        sizes=parse_sizes(args.sizes),
        density=Fraction(args.density),
        targets=targets,
        undo_mode=args.undo_mode,
        epsilon=Fraction(args.epsilon),
        delta=Fraction(args.delta),
        inject_fault=getattr(args, "inject_fault", None),
    )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="omvlab",
        description="online Boolean matrix-vector engines, reduction gadgets, "
                    "and dynamic-problem oracles")
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("gen", help="write deterministic instance files")
    _add_campaign_args(gen)

    verify = subs.add_parser("verify", help="run decode/budget/gap verification")
    _add_campaign_args(verify)
    verify.add_argument("--inject-fault", type=int, default=None, metavar="K",
                        help="flip the K-th oracle answer in a canary run per target; "
                             "the campaign must then report failure")

    bench = subs.add_parser("bench", help="time targets over the grid, emit CSV")
    _add_campaign_args(bench)

    rep = subs.add_parser("report", help="summarize a bench CSV")
    rep.add_argument("csv", type=str, help="bench CSV path, or - for stdin")
    rep.add_argument("--out", type=str, default="",
                     help="directory for summary, CSV passthrough, and figures")
    rep.add_argument("--no-figures", action="store_true",
                     help="skip matplotlib figure rendering")

    args = parser.parse_args(argv)

    if args.command == "gen":
        campaign = _campaign_from_args(args)
        out_dir = Path(args.out) if args.out else Path("instances")
        written = generate_files(campaign, out_dir)
        print(f"wrote {len(written)} files under {out_dir}")
        return 0

    if args.command == "verify":
        campaign = _campaign_from_args(args)
        try:
            text, ok = verify_campaign(campaign)
        except ValueError as exc:
            print(f"verify: {exc}", file=sys.stderr)
            return 2
        if args.out:
            Path(args.out).write_text(text)
        sys.stdout.write(text)
        return 0 if ok else 1

    if args.command == "bench":
        campaign = _campaign_from_args(args)
        try:
            csv_text = bench_campaign(campaign)
        except ValueError as exc:
            print(f"bench: {exc}", file=sys.stderr)
            return 2
        if args.out:
            Path(args.out).write_text(csv_text)
        else:
            sys.stdout.write(csv_text)
        return 0

    if args.command == "report":
        csv_text = sys.stdin.read() if args.csv == "-" else Path(args.csv).read_text()
        try:
            summary = report(csv_text,
                             Path(args.out) if args.out else None,
                             figures=not args.no_figures)
        except ValueError as exc:
            print(f"report: {exc}", file=sys.stderr)
            return 2
        sys.stdout.write(summary)
        return 0

    return 2


if __name__ == "__main__":
    sys.exit(main())
