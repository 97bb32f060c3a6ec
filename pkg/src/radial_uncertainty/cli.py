"""Command-line front end.

    radial-uncertainty hydrogen --n 3 --l 2
    radial-uncertainty isw --n 5 --l 4 --format json
    radial-uncertainty table IX --format csv
    radial-uncertainty figure vs-n --system hydrogen --l 0 --max-n 4
    radial-uncertainty verify --systems hydrogen sho --max-n 4 --report report.csv

Exit status: 0 on success, 1 when ``verify`` finds a failing comparison,
2 for invalid input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import figures, tables, verify
from .observables import InvalidStateError
from .output import DEFAULT_PRECISION, FORMATS, OutputRecord, render, render_records, render_table
from .systems import SYSTEM_NAMES, QuantumState, closed_form

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _add_format(p, default="table"):
    p.add_argument("--format", choices=FORMATS, default=default)
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                   help="significant digits for floats (default %(default)s)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="radial-uncertainty",
        description="Radial expectation values and uncertainty products for hydrogenic atoms, "
                    "the infinite spherical well and the isotropic harmonic oscillator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in SYSTEM_NAMES:
        p = sub.add_parser(name, help=f"observables of one {name} state")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--l", dest="ell", type=int, required=True)
        if name == "hydrogen":
            p.add_argument("--Z", type=int, choices=(1, 2, 3, 4), default=1)
        _add_format(p)

    p = sub.add_parser("table", help="regenerate one of the published tables")
    p.add_argument("table_id", metavar="id", help=f"one of {', '.join(tables.TABLE_IDS)}")
    _add_format(p)

    p = sub.add_parser("figure", help="plot-ready series")
    p.add_argument("family", choices=figures.FAMILIES)
    p.add_argument("--system", choices=SYSTEM_NAMES, default="hydrogen")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--l", dest="ell", type=int)
    group.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--Z", type=int, choices=(1, 2, 3, 4), default=1)
    p.add_argument("--points", type=int, default=201)
    _add_format(p, default="csv")

    p = sub.add_parser("verify", help="compare every closed form against the quadrature oracle")
    p.add_argument("--systems", nargs="+", choices=SYSTEM_NAMES, default=list(SYSTEM_NAMES))
    p.add_argument("--max-n", type=int, help="upper n for every system (defaults: 6, 5, 6)")
    p.add_argument("--Z", type=int, nargs="+", default=[1], choices=(1, 2, 3, 4), dest="z_values")
    p.add_argument("--tol", type=float, default=1e-8,
                   help="relative tolerance; near-zero fields use tol/10 absolute")
    p.add_argument("--workers", type=int, default=4)
    p.add_argument("--report", type=Path, help="write the full report here (.json or .csv)")
    return parser


def cmd_state(args, out):
    Z = getattr(args, "Z", 1)
    state = QuantumState(args.command, args.n, args.ell, Z)
    record = OutputRecord.from_state(state, closed_form(state))
    out.write(render_records([record], args.format, args.precision))
    return EXIT_OK


def cmd_table(args, out):
    try:
        table = tables.generate(args.table_id)
    except KeyError as exc:
        raise InvalidStateError(exc.args[0]) from None
    out.write(render_table(table, args.format, args.precision))
    return EXIT_OK


def cmd_figure(args, out):
    series = figures.figure(args.family, args.system, ell=args.ell, n=args.n, max_n=args.max_n,
                            Z=args.Z, points=args.points)
    title = f"{series.family} {series.system}" if args.format != "csv" else None
    out.write(render(series.names, series.units, series.rows, args.format, args.precision, title=title))
    return EXIT_OK


def cmd_verify(args, out):
    if args.tol < 0:
        raise InvalidStateError("--tol must be non-negative")
    kwargs = {}
    if args.max_n is not None:
        kwargs = {"hydrogen_max_n": args.max_n, "isw_max_n": args.max_n, "sho_max_n": args.max_n}
    config = verify.SuiteConfig(systems=tuple(args.systems), z_values=tuple(args.z_values),
                                rel_tol=args.tol, abs_tol=args.tol / 10, workers=args.workers, **kwargs)
    reports = verify.run_suite(config)
    summary = verify.summarize(reports)
    out.write(f"states scanned: {summary.states}\nchecks: {summary.checks}\nfailures: {len(summary.failures)}\n")
    for r in summary.failures[:20]:
        out.write(f"  FAIL {r.system}({r.n},{r.ell},Z={r.Z}) {r.field}: closed={r.closed_form!r} "
                  f"oracle={r.oracle!r} rel={r.rel_diff:.3g}\n")
    if len(summary.failures) > 20:
        out.write(f"  ... {len(summary.failures) - 20} more\n")
    if args.report is not None:
        text = verify.reports_to_json(reports) if args.report.suffix == ".json" else verify.reports_to_csv(reports)
        args.report.write_text(text, encoding="utf-8")
        out.write(f"report: {args.report}\n")
    return EXIT_OK if summary.ok else EXIT_FAIL


COMMANDS = {"table": cmd_table, "figure": cmd_figure, "verify": cmd_verify}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    handler = COMMANDS.get(args.command, cmd_state)
    try:
        return handler(args, out)
    except (InvalidStateError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
