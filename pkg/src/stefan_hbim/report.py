"""Comparison tables, Bi-convergence sweeps, temperature grids and their serialization."""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import DomainError, StefanError
from .model import Boundary, MethodKind, ProblemParams, Scheme, SimilaritySolution, free_boundary
from .rootfind import DEFAULT_SOLVE, SolveControl
from .solvers import require_boundary, solve, temperature


def error_pct(nu_exact: float, nu_approx: float) -> float:
    """Percentage relative error 100 |nu_exact - nu_approx| / nu_exact."""
    if not nu_exact > 0:
        raise DomainError(f"reference coefficient must be positive, got {nu_exact}")
    return 100.0 * abs(nu_exact - nu_approx) / nu_exact


@dataclass(frozen=True)
class MethodEntry:
    method: MethodKind
    nu: Optional[float]
    pct: Optional[float]


@dataclass(frozen=True)
class ErrorRow:
    sweep_value: float
    nu_exact: Optional[float]
    entries: tuple[MethodEntry, ...]
    note: str = ""

    def entry(self, method: MethodKind | str) -> MethodEntry:
        name = method if isinstance(method, str) else method.name
        for e in self.entries:
            if e.method.name == name:
                return e
        raise KeyError(name)


def _row(sweep_value: float, p: ProblemParams, methods: Sequence[MethodKind], ctrl: SolveControl) -> ErrorRow:
    notes = []
    try:
        nu_exact = solve(_exact_for(p), p, ctrl).nu
    except StefanError as exc:
        nu_exact = None
        notes.append(f"exact: {exc}")
    entries = []
    for m in methods:
        try:
            nu = solve(m, p, ctrl).nu
        except StefanError as exc:
            entries.append(MethodEntry(m, None, None))
            notes.append(f"{m}: {exc}")
            continue
        entries.append(MethodEntry(m, nu, None if nu_exact is None else error_pct(nu_exact, nu)))
    return ErrorRow(sweep_value, nu_exact, tuple(entries), "; ".join(notes))


def _exact_for(p: ProblemParams) -> MethodKind:
    return MethodKind(Scheme.EXACT, Boundary.DIRICHLET if p.bi is None else Boundary.ROBIN)


def _run_rows(fn: Callable[[float], ErrorRow], values: Iterable[float], workers: Optional[int]) -> list[ErrorRow]:
    values = list(values)
    if workers and workers > 1 and len(values) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, values))  # map keeps input order
    return [fn(v) for v in values]


def _approximations(methods: Sequence[MethodKind]) -> list[MethodKind]:
    return [m for m in methods if m.scheme is not Scheme.EXACT]


def table_dirichlet(alpha: float, ste_list: Iterable[float], methods: Sequence[MethodKind],
                    ctrl: SolveControl = DEFAULT_SOLVE, workers: Optional[int] = None) -> list[ErrorRow]:
    """One row per Stefan number: exact coefficient plus each requested approximation."""
    methods = _approximations(methods)
    require_boundary(methods, robin=False)
    return _run_rows(lambda ste: _row(ste, ProblemParams(alpha, ste), methods, ctrl), ste_list, workers)


def table_convective(alpha: float, ste: float, bi_list: Iterable[float], methods: Sequence[MethodKind],
                     ctrl: SolveControl = DEFAULT_SOLVE, workers: Optional[int] = None) -> list[ErrorRow]:
    """One row per Biot number for the convective problem."""
    methods = _approximations(methods)
    require_boundary(methods, robin=True)
    return _run_rows(lambda bi: _row(bi, ProblemParams(alpha, ste, bi), methods, ctrl), bi_list, workers)


@dataclass(frozen=True)
class ConvergenceRow:
    bi: float
    nu_h: float
    nu_limit: float
    gap: float


def convergence_sweep(alpha: float, ste: float, bi_grid: Sequence[float], method: MethodKind,
                      ctrl: SolveControl = DEFAULT_SOLVE) -> list[ConvergenceRow]:
    """nu of a convective method along increasing Bi, against its fixed-temperature limit."""
    bi_grid = list(bi_grid)
    if any(b2 <= b1 for b1, b2 in zip(bi_grid, bi_grid[1:])):
        raise DomainError("Bi grid must be strictly increasing")
    robin = MethodKind(method.scheme, Boundary.ROBIN)
    limit = solve(robin.dirichlet_limit(), ProblemParams(alpha, ste), ctrl).nu
    rows = []
    for bi in bi_grid:
        nu_h = solve(robin, ProblemParams(alpha, ste, bi), ctrl).nu
        rows.append(ConvergenceRow(bi, nu_h, limit, abs(nu_h - limit)))
    return rows


@dataclass(frozen=True)
class FieldGrid:
    """Temperatures on a rectangular (t, x) grid; NaN marks points past the front."""

    x_values: np.ndarray
    t_values: np.ndarray
    temperature: np.ndarray  # shape (nt, nx)
    front_position: np.ndarray
    method: MethodKind


def sample_field(p: ProblemParams, s: SimilaritySolution, x_max: float, t_range: tuple[float, float],
                 nx: int, nt: int) -> FieldGrid:
    if nx < 2 or nt < 2:
        raise DomainError("field grids need at least 2 points per axis")
    t0, t1 = t_range
    if not (0 < t0 < t1) or not x_max > 0:
        raise DomainError("need 0 < t_start < t_end and x_max > 0")
    xs = np.linspace(0.0, x_max, nx)
    ts = np.linspace(t0, t1, nt)
    front = np.array([free_boundary(p, s, t) for t in ts])
    temp = np.full((nt, nx), np.nan)
    for i, t in enumerate(ts):
        for j, x in enumerate(xs):
            if x <= front[i]:
                temp[i, j] = temperature(p, s, float(x), float(t))
    return FieldGrid(xs, ts, temp, front, s.method)


# ---------------------------------------------------------------- serialization

def fmt_number(v: Optional[float]) -> str:
    """Six significant digits; empty for a missing value."""
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return ""
    return format(v, ".6g")


def _method_names(rows: Sequence[ErrorRow]) -> list[str]:
    return [e.method.name for e in rows[0].entries] if rows else []


def rows_to_csv(rows: Sequence[ErrorRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["sweep", "nu_exact"]
    for name in _method_names(rows):
        header += [f"{name}_nu", f"{name}_pct"]
    w.writerow(header + ["note"])
    for r in rows:
        line = [fmt_number(r.sweep_value), fmt_number(r.nu_exact)]
        for e in r.entries:
            line += [fmt_number(e.nu), fmt_number(e.pct)]
        w.writerow(line + [r.note])
    return buf.getvalue()


def rows_to_json(rows: Sequence[ErrorRow]) -> str:
    doc = [
        {
            "sweep": r.sweep_value,
            "nu_exact": r.nu_exact,
            "entries": [{"method": e.method.name, "nu": e.nu, "pct": e.pct} for e in r.entries],
            "note": r.note or None,
        }
        for r in rows
    ]
    return json.dumps(doc, indent=2) + "\n"


def convergence_to_csv(rows: Sequence[ConvergenceRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["bi", "nu_h", "nu_limit", "gap"])
    for r in rows:
        w.writerow([fmt_number(r.bi), fmt_number(r.nu_h), fmt_number(r.nu_limit), fmt_number(r.gap)])
    return buf.getvalue()


def convergence_to_json(rows: Sequence[ConvergenceRow]) -> str:
    doc = [{"bi": r.bi, "nu_h": r.nu_h, "nu_limit": r.nu_limit, "gap": r.gap} for r in rows]
    return json.dumps(doc, indent=2) + "\n"


def field_to_csv(g: FieldGrid) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t\\x"] + [fmt_number(float(x)) for x in g.x_values] + ["front_position"])
    for t, row, front in zip(g.t_values, g.temperature, g.front_position):
        w.writerow([fmt_number(float(t))] + [fmt_number(float(v)) for v in row] + [fmt_number(float(front))])
    return buf.getvalue()


def field_to_json(g: FieldGrid) -> str:
    def cell(v):
        return None if math.isnan(v) else float(v)

    doc = {
        "method": g.method.name,
        "x": [float(x) for x in g.x_values],
        "t": [float(t) for t in g.t_values],
        "front_position": [float(f) for f in g.front_position],
        "temperature": [[cell(v) for v in row] for row in g.temperature],
    }
    return json.dumps(doc) + "\n"
