"""``baselgeom`` command line.

Subcommands::

    check [NAME|all] [--seed S] [--mc-samples N] [--quad-rtol R] [--format text|json] [--out FILE]
    solve (--angles ALPHA BETA | --sides A B | --logsides X Y)
    plot FIGURE --format svg|csv --out FILE

Exit status: 0 success, 1 a check failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict

from .. import kernels
from ..errors import DomainError, UnknownCheck, UnknownFigure
from ..regions import classify_T, classify_U
from ..triangle import (
    AngularCoords,
    LogRadialCoords,
    RadialCoords,
    angles_to_sides,
    sides_to_angles,
)
from .checks import CHECKS, SEED_ENV, CheckReport, RunConfig, default_seed, run_all, run_check
from .figures import FIGURES, render_figure

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="baselgeom",
        description="Numerical verification of the bipolar-coordinate proof that sum 1/n^2 = pi^2/6.",
        epilog=f"The default random seed is read from ${SEED_ENV} (0 when unset).",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = sub.add_parser("check", help="run verification checks",
                           epilog=f"Default seed comes from ${SEED_ENV} (0 when unset).")
    check.add_argument("name", nargs="?", default="all", help=f"check name or 'all' ({', '.join(CHECKS)})")
    check.add_argument("--seed", type=int, default=None, help=f"random seed (default: ${SEED_ENV} or 0)")
    check.add_argument("--mc-samples", type=int, default=1_000_000)
    check.add_argument("--quad-rtol", type=float, default=1e-10)
    check.add_argument("--sweep-points", type=int, default=10_000)
    check.add_argument("--format", choices=("text", "json"), default="text")
    check.add_argument("--out", default=None, help="write the report here instead of stdout")
    check.add_argument("--jobs", type=int, default=1, help="run checks on this many threads")

    solve = sub.add_parser("solve", help="solve a unit-base triangle from one coordinate pair")
    group = solve.add_mutually_exclusive_group(required=True)
    group.add_argument("--angles", nargs=2, type=float, metavar=("ALPHA", "BETA"))
    group.add_argument("--sides", nargs=2, type=float, metavar=("A", "B"))
    group.add_argument("--logsides", nargs=2, type=float, metavar=("X", "Y"))

    plot = sub.add_parser("plot", help="render one of the figures")
    plot.add_argument("figure", choices=FIGURES)
    plot.add_argument("--format", choices=("svg", "csv"), default="svg")
    plot.add_argument("--out", required=True)
    return parser


def format_text(reports: list[CheckReport]) -> str:
    lines = []
    for r in reports:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark}  {r.name:<22} measured={r.measured:.12g} expected={r.expected:.12g} "
                     f"tol={r.tolerance:.3g} work={r.work}")
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"


def format_json(reports: list[CheckReport], config: RunConfig) -> str:
    doc = {"config": {**asdict(config), "backend": kernels.BACKEND},
           "reports": [r.to_dict() for r in reports]}
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _cmd_check(args) -> int:
    config = RunConfig(
        seed=default_seed() if args.seed is None else args.seed,
        mc_samples=args.mc_samples,
        quad_rel_tol=args.quad_rtol,
        jacobian_sweep_points=args.sweep_points,
        format=args.format,
    )
    if args.name == "all":
        reports, status = run_all(config, jobs=args.jobs)
    else:
        report = run_check(args.name, config)
        reports, status = [report], EXIT_OK if report.passed else EXIT_FAILED
    text = format_json(reports, config) if args.format == "json" else format_text(reports)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def solve_text(p: AngularCoords) -> str:
    q = angles_to_sides(p)
    r = LogRadialCoords(-math.log(q.a), -math.log(q.b))
    return "\n".join([
        f"angles   alpha={p.alpha:.10g} beta={p.beta:.10g} gamma={p.gamma:.10g}",
        f"sides    A={q.a:.10g} B={q.b:.10g} base=1",
        f"logsides x={r.x:.10g} y={r.y:.10g}",
        f"labels   T:{classify_T(p).name} U:{classify_U(r).name}",
    ]) + "\n"


def _cmd_solve(args) -> int:
    if args.angles:
        p = AngularCoords(*args.angles)
    elif args.sides:
        p = sides_to_angles(RadialCoords(*args.sides))
    else:
        p = sides_to_angles(LogRadialCoords(*args.logsides).to_radial())
    sys.stdout.write(solve_text(p))
    return EXIT_OK


def _cmd_plot(args) -> int:
    path = render_figure(args.figure, args.out, args.format)
    print(f"wrote {path}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"check": _cmd_check, "solve": _cmd_solve, "plot": _cmd_plot}
    try:
        return handlers[args.command](args)
    except (DomainError, UnknownCheck, UnknownFigure, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"baselgeom: error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
