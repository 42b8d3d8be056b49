"""Method-tag dispatch shared by the report layer and the command line."""
from __future__ import annotations

from typing import Callable

from . import exact, hbim, leastsq
from .errors import DomainError
from .model import MethodKind, ProblemParams, Scheme, SimilaritySolution
from .rootfind import DEFAULT_SOLVE, SolveControl

Solver = Callable[[ProblemParams, SolveControl], SimilaritySolution]

SOLVERS: dict[MethodKind, Solver] = {
    exact.EXACT: exact.solve_exact_dirichlet,
    exact.EXACT_H: exact.solve_exact_robin,
    hbim.P1: hbim.solve_p1,
    hbim.P2: hbim.solve_p2,
    hbim.P3: hbim.solve_p3,
    hbim.P1H: hbim.solve_p1h,
    hbim.P2H: hbim.solve_p2h,
    hbim.P3H: hbim.solve_p3h,
    leastsq.P4: leastsq.solve_p4,
    leastsq.P4H: leastsq.solve_p4h,
}


def solve(method: MethodKind | str, p: ProblemParams, ctrl: SolveControl = DEFAULT_SOLVE) -> SimilaritySolution:
    if isinstance(method, str):
        method = MethodKind.from_name(method)
    if method.is_robin:
        p.require_bi()
    return SOLVERS[method](p, ctrl)


def temperature(p: ProblemParams, s: SimilaritySolution, x: float, t: float) -> float:
    """Evaluate T(x, t) with the evaluator matching the solution's method."""
    if s.method.scheme is Scheme.EXACT:
        return exact.eval_exact_temperature(p, s, x, t)
    return hbim.eval_quadratic_temperature(p, s, x, t)


def require_boundary(methods, robin: bool) -> None:
    for m in methods:
        if m.is_robin != robin:
            kind = "convective" if robin else "fixed-temperature"
            raise DomainError(f"method {m} does not belong to a {kind} table")
