"""holoconf command line: verify, table, grid."""

from __future__ import annotations

import argparse
import os
import sys

from .algebra import GENERATOR_TABLE_STRINGS, GENERATORS, UPSILON_LINE
from .grids import GRID_KINDS, emit_grid
from .report import SUITE_NAMES, SuiteConfig
from .suites import run_suite

REALIZATION_NAMES = ("cartesian", "polar", "holographic", "conformal", UPSILON_LINE)


def _default_seed() -> int:
    env = os.environ.get("HOLOCONF_SEED")
    try:
        return int(env) if env is not None else 1
    except ValueError:
        raise SystemExit(f"HOLOCONF_SEED must be an integer, got {env!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holoconf",
        description="verify the conformal-algebra / bicomplex identity suites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run identity suites and report")
    verify.add_argument(
        "--suite",
        action="append",
        choices=SUITE_NAMES + ("all",),
        help="suite to run (repeatable; default all)",
    )
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--samples", type=int, default=50)
    verify.add_argument("--tol", type=float, default=1e-10)
    verify.add_argument("--format", choices=("json", "text"), default="json")

    table = sub.add_parser("table", help="print a generator coefficient table")
    table.add_argument("--realization", choices=REALIZATION_NAMES, required=True)

    grid = sub.add_parser("grid", help="emit a CSV sample grid")
    grid.add_argument("--kind", choices=GRID_KINDS, required=True)
    grid.add_argument("--res", type=int, required=True)
    grid.add_argument("--out", required=True)
    return parser


def cmd_verify(args) -> int:
    suites = args.suite or ["all"]
    if "all" in suites:
        suites = list(SUITE_NAMES)
    seed = args.seed if args.seed is not None else _default_seed()
    cfg = SuiteConfig(
        seed=seed, samples=args.samples, tol=args.tol, suites=tuple(dict.fromkeys(suites))
    )
    report = run_suite(cfg)
    print(report.to_json() if args.format == "json" else report.to_text())
    return 0 if report.overall_pass else 1


def cmd_table(args) -> int:
    table = GENERATOR_TABLE_STRINGS[args.realization]
    if args.realization == UPSILON_LINE:
        headers = ("generator", "coefficient of d/du")
    elif args.realization == "cartesian":
        headers = ("generator", "coefficient of d/dx0", "coefficient of d/dx1")
    else:
        names = {
            "polar": ("d/dr", "d/dphi"),
            "holographic": ("d/dtheta", "d/dphi"),
            "conformal": ("d/drho", "d/dphi"),
        }[args.realization]
        headers = ("generator",) + tuple(f"coefficient of {n}" for n in names)
    rows = [headers] + [(g.value,) + table[g] for g in GENERATORS]
    widths = [max(len(str(r[k])) for r in rows) for k in range(len(headers))]
    for r in rows:
        print("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip())
    return 0


def cmd_grid(args) -> int:
    n = emit_grid(args.kind, args.res, args.out)
    print(f"wrote {n} rows to {args.out}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"verify": cmd_verify, "table": cmd_table, "grid": cmd_grid}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
