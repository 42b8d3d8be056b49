"""Command-line front end: ``stefan-hbim {solve,table,converge,field}``.

Exit status: 0 on success, 2 on invalid input (one-line message on stderr),
1 when a solver fails. ``STEFAN_HBIM_FORMAT`` (csv or json) overrides the
per-command default output format.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from typing import Optional, Sequence

from . import report
from .errors import DomainError, StefanError
from .model import MethodKind, ProblemParams
from .solvers import solve

FORMAT_ENV = "STEFAN_HBIM_FORMAT"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep diagnostics to one line
        raise UsageError(message)


def parse_sweep(text: str) -> list[float]:
    """``a,b,c`` or inclusive ``lo:hi:step``."""
    text = text.strip()
    try:
        if ":" in text:
            parts = [float(x) for x in text.split(":")]
            if len(parts) != 3:
                raise ValueError
            lo, hi, step = parts
            if step <= 0 or hi < lo:
                raise UsageError(f"range {text!r} needs lo <= hi and step > 0")
            n = math.floor((hi - lo) / step + 1e-9)
            return [round(lo + i * step, 12) for i in range(n + 1)]
        values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"malformed sweep {text!r}; use a,b,c or lo:hi:step") from None
    if not values:
        raise UsageError("empty sweep")
    return values


def _single(text: str, name: str) -> float:
    values = parse_sweep(text)
    if len(values) != 1:
        raise UsageError(f"{name} must be a single value here, got {len(values)}")
    return values[0]


def _methods(text: str) -> list[MethodKind]:
    return [MethodKind.from_name(m) for m in text.split(",") if m.strip()]


def _common(sp: argparse.ArgumentParser, sweep_ste: bool = False, sweep_bi: bool = False) -> None:
    sp.add_argument("--alpha", type=float, required=True, help="latent-heat exponent (>= 0)")
    sp.add_argument("--ste", required=True, help="Stefan number" + (" (value, list or lo:hi:step)" if sweep_ste else ""))
    sp.add_argument("--bi", help="Biot number" + (" (value, list or lo:hi:step)" if sweep_bi else ""))
    sp.add_argument("--format", choices=("csv", "json"))
    sp.add_argument("--output", "-o", help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="stefan-hbim", description="Stefan problems with power-law latent heat.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("solve", help="front coefficient and profile constants for one method")
    _common(sp)
    sp.add_argument("--method", required=True)
    sp.add_argument("--theta-inf", type=float, default=1.0)
    sp.add_argument("--a-diff", type=float, default=1.0)

    sp = sub.add_parser("table", help="percentage-error table over a Ste or Bi sweep")
    _common(sp, sweep_ste=True, sweep_bi=True)
    sp.add_argument("--methods", required=True, help="comma list, e.g. p1,p2,p3")
    sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("converge", help="convective coefficient against Bi and its fixed-temperature limit")
    _common(sp, sweep_bi=True)
    sp.add_argument("--method", required=True, help="exacth, p1h, p2h, p3h or p4h")

    sp = sub.add_parser("field", help="temperature grid over (x, t)")
    _common(sp)
    sp.add_argument("--method", required=True)
    sp.add_argument("--theta-inf", type=float, default=1.0)
    sp.add_argument("--a-diff", type=float, default=1.0)
    sp.add_argument("--x-max", type=float, required=True)
    sp.add_argument("--t-range", required=True, help="t_start:t_end")
    sp.add_argument("--nx", type=int, default=100)
    sp.add_argument("--nt", type=int, default=100)
    return ap


def _format(args, default: str) -> str:
    fmt = args.format or os.environ.get(FORMAT_ENV, default)
    if fmt not in ("csv", "json"):
        raise UsageError(f"{FORMAT_ENV} must be csv or json, got {fmt!r}")
    return fmt


def _bi(args) -> Optional[float]:
    return None if args.bi is None else _single(args.bi, "--bi")


def _params(args) -> ProblemParams:
    return ProblemParams(args.alpha, _single(args.ste, "--ste"), _bi(args),
                         getattr(args, "theta_inf", 1.0), getattr(args, "a_diff", 1.0))


def _cmd_solve(args) -> tuple[str, int]:
    method = MethodKind.from_name(args.method)
    p = _params(args)
    s = solve(method, p)
    doc = {"method": method.name, "alpha": p.alpha, "ste": p.ste, "bi": p.bi,
           "nu": s.nu, "A": s.coeff_a * p.theta_inf, "B": s.coeff_b * p.theta_inf,
           "roots": list(s.roots), "flags": sorted(s.flags)}
    if _format(args, "json") == "json":
        return json.dumps(doc, indent=2) + "\n", 0
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["method", "alpha", "ste", "bi", "nu", "A", "B", "flags"])
    w.writerow([method.name, *(report.fmt_number(doc[k]) for k in ("alpha", "ste", "bi", "nu", "A", "B")),
                " ".join(doc["flags"])])
    return buf.getvalue(), 0


def _cmd_table(args) -> tuple[str, int]:
    methods = _methods(args.methods)
    robin = {m.is_robin for m in methods}
    if len(robin) > 1:
        raise UsageError("cannot mix fixed-temperature and convective methods in one table")
    stes = parse_sweep(args.ste)
    if robin == {True}:
        if args.bi is None:
            raise UsageError("convective methods need --bi")
        if len(stes) != 1:
            raise UsageError("a convective table sweeps Bi; give a single --ste")
        rows = report.table_convective(args.alpha, stes[0], parse_sweep(args.bi), methods, workers=args.workers)
    else:
        if args.bi is not None:
            raise UsageError("fixed-temperature methods take no --bi")
        ProblemParams(args.alpha, min(stes))
        rows = report.table_dirichlet(args.alpha, stes, methods, workers=args.workers)
    fmt = _format(args, "csv")
    text = report.rows_to_csv(rows) if fmt == "csv" else report.rows_to_json(rows)
    failed = [r for r in rows if r.note]
    for r in failed:
        print(f"stefan-hbim: row {r.sweep_value:g}: {r.note}", file=sys.stderr)
    return text, 1 if failed else 0


def _cmd_converge(args) -> tuple[str, int]:
    method = MethodKind.from_name(args.method)
    if args.bi is None:
        raise UsageError("converge needs a --bi sweep")
    bis = parse_sweep(args.bi)
    ProblemParams(args.alpha, _single(args.ste, "--ste"), min(bis))
    rows = report.convergence_sweep(args.alpha, _single(args.ste, "--ste"), bis, method)
    fmt = _format(args, "csv")
    return (report.convergence_to_csv(rows) if fmt == "csv" else report.convergence_to_json(rows)), 0


def _cmd_field(args) -> tuple[str, int]:
    method = MethodKind.from_name(args.method)
    p = _params(args)
    try:
        t_range = [float(v) for v in args.t_range.split(":")]
    except ValueError:
        t_range = []
    if len(t_range) != 2:
        raise UsageError("--t-range must look like t_start:t_end")
    s = solve(method, p)
    grid = report.sample_field(p, s, args.x_max, (t_range[0], t_range[1]), args.nx, args.nt)
    fmt = _format(args, "csv")
    return (report.field_to_csv(grid) if fmt == "csv" else report.field_to_json(grid)), 0


_COMMANDS = {"solve": _cmd_solve, "table": _cmd_table, "converge": _cmd_converge, "field": _cmd_field}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text, status = _COMMANDS[args.command](args)
    except (UsageError, DomainError) as exc:
        print(f"stefan-hbim: error: {exc}", file=sys.stderr)
        return 2
    except StefanError as exc:
        print(f"stefan-hbim: solver failed: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
