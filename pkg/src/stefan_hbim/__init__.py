"""Exact and integral-method solutions of one-phase Stefan problems whose latent
heat grows as a power of position, with fixed-temperature or convective faces."""
from .errors import BadBracketError, ConvergenceError, DomainError, NoRootError, StefanError
from .exact import eval_exact_temperature, solve_exact_dirichlet, solve_exact_robin
from .hbim import (
    eval_quadratic_temperature,
    solve_p1,
    solve_p1h,
    solve_p2,
    solve_p2h,
    solve_p3,
    solve_p3h,
)
from .leastsq import lsq_error_direct, p4_polynomial, solve_p4, solve_p4h
from .model import METHODS, Boundary, MethodKind, ProblemParams, Scheme, SimilaritySolution, free_boundary
from .report import (
    ErrorRow,
    FieldGrid,
    convergence_sweep,
    error_pct,
    sample_field,
    table_convective,
    table_dirichlet,
)
from .rootfind import SolveControl, bisect, minimize_scalar, scan_brackets
from .solvers import solve, temperature
from .specfun import SeriesControl, f_aux, kummer_m, pochhammer

__all__ = [name for name in dir() if not name.startswith("_")]
