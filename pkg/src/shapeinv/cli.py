"""Command-line front end.

    shapeinv list
    shapeinv compute --family rosen_morse_2 --set A=2 --set B=1 --set alpha=1 \
        --levels 1 --methods exact,wkb,ft --format table
    shapeinv table2 [--format csv]
    shapeinv verify

Exit status: 0 on success, 2 on a usage error, 1 when ``verify`` fails.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog, report, verify

TABLE2_COLUMNS = ("family", "params", "n", "e_exact", "e_wkb", "pct_err_wkb",
                  "e_ft", "pct_err_ft")


class UsageError(Exception):
    pass


def _parse_set(items):
    out = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--set expects key=value, got {item!r}")
        try:
            out[key.strip()] = float(val)
        except ValueError:
            raise UsageError(f"--set {key}: {val!r} is not a number") from None
    return out


def _cmd_list(args, out):
    for fid, info in catalog.FAMILY_INFO.items():
        spec = catalog.make_spec(fid)
        levels = "infinite" if spec.max_level is None else spec.max_level
        out.write(f"{fid}\n")
        out.write(f"    {info.name}\n")
        out.write(f"    W(x)        = {info.superpotential}\n")
        out.write(f"    domain      = {info.domain}\n")
        out.write(f"    defaults    = {report.format_params(info.defaults)}\n")
        out.write(f"    translation = {info.translation or 'none'}\n")
        out.write(f"    constraints = {info.constraints}\n")
        out.write(f"    E_n (V_-)   = {info.spectrum}\n")
        out.write(f"    bound states at defaults: {levels}\n")
    return 0


def _cmd_compute(args, out):
    if args.family not in catalog.FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; valid: "
                         f"{', '.join(catalog.FAMILIES)}")
    overrides = _parse_set(args.set)
    try:
        catalog.resolve_params(args.family, overrides)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    if args.levels < 1:
        raise UsageError("--levels must be at least 1")
    try:
        cfg = report.RunConfig(
            families=(args.family,), overrides={args.family: overrides},
            n_max=args.levels - 1, methods=methods, format=args.format,
            action_rel_tol=args.action_rel_tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = report.run_comparison(cfg)
    out.write(report.emit(rows, cfg.format))
    return 0


def _cmd_table2(args, out):
    rows = report.table2_rows()
    out.write(report.emit(rows, args.format, columns=TABLE2_COLUMNS))
    return 0


def _cmd_verify(args, out):
    results = verify.run_all()
    for check in results:
        out.write(check.line() + "\n")
    failed = sum(not c.passed for c in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shapeinv",
        description="Semiclassical energy levels of shape-invariant potentials")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the catalogue with default parameters")

    p = sub.add_parser("compute", help="levels of one family by several methods")
    p.add_argument("--family", required=True)
    p.add_argument("--set", action="append", metavar="KEY=VALUE",
                   help="override a parameter (repeatable)")
    p.add_argument("--levels", type=int, default=1,
                   help="number of levels, starting from the ground state")
    p.add_argument("--methods", default="exact,wkb,swkb,ft")
    p.add_argument("--format", choices=report.FORMATS, default="table")
    p.add_argument("--action-rel-tol", type=float,
                   default=report.RunConfig.action_rel_tol,
                   help="relative tolerance of the action quadrature")

    p = sub.add_parser("table2", help="ground-state comparison for all families")
    p.add_argument("--format", choices=report.FORMATS, default="table")

    sub.add_parser("verify", help="run the self-check suite")
    return parser


COMMANDS = {"list": _cmd_list, "compute": _cmd_compute, "table2": _cmd_table2,
            "verify": _cmd_verify}


def cli_main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write(f"shapeinv: error: {exc}\n")
        return 2


def main():
    sys.exit(cli_main())
