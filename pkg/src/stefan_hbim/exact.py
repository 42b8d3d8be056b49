"""Closed-form similarity solutions for the Dirichlet and convective problems."""
from __future__ import annotations

import math

from .errors import DomainError, NoRootError
from .model import Boundary, MethodKind, ProblemParams, Scheme, SimilaritySolution, free_boundary
from .rootfind import DEFAULT_SOLVE, SolveControl, bisect, scan_brackets
from .specfun import SeriesControl, f_aux, kummer_m

EXACT = MethodKind(Scheme.EXACT, Boundary.DIRICHLET)
EXACT_H = MethodKind(Scheme.EXACT, Boundary.ROBIN)

Z_EPS = 1e-9
Z_MAX = 5.0
# M(., ., z**2) overflows a double near z ~ 26
Z_CAP = 20.0


def _series_for(zmax: float) -> SeriesControl:
    return SeriesControl(max_terms=max(500, int(2 * zmax * zmax) + 100))


def dirichlet_residual(z: float, alpha: float, ste: float, ctrl: SeriesControl | None = None) -> float:
    ctrl = ctrl or _series_for(z)
    return ste / 2 ** (alpha + 1) * f_aux(z, alpha, ctrl) - z ** (alpha + 1)


def robin_residual(z: float, alpha: float, ste: float, bi: float, ctrl: SeriesControl | None = None) -> float:
    ctrl = ctrl or _series_for(z)
    denom = 1.0 / f_aux(z, alpha, ctrl) + kummer_m(alpha / 2 + 0.5, 0.5, z * z, ctrl) / (2 * bi)
    return ste / 2 ** (alpha + 1) / denom - z ** (alpha + 1)


def _unique_root(fn, ste: float, ctrl: SolveControl) -> tuple[float, tuple[float, ...]]:
    hi = 1.0 if ste < 1 else Z_MAX
    while True:
        brackets = scan_brackets(fn, Z_EPS, hi, ctrl.scan_points)
        if brackets:
            roots = tuple(bisect(fn, b, ctrl) for b in brackets)
            return roots[0], roots
        if hi >= Z_CAP:
            raise NoRootError(f"no sign change of the exact residual on (0, {hi}]")
        hi = min(2 * hi, Z_CAP)


def solve_exact_dirichlet(p: ProblemParams, ctrl: SolveControl = DEFAULT_SOLVE) -> SimilaritySolution:
    sc = _series_for(Z_MAX)
    nu, roots = _unique_root(lambda z: dirichlet_residual(z, p.alpha, p.ste, sc), p.ste, ctrl)
    a = p.alpha
    m1 = kummer_m(-a / 2, 0.5, -nu * nu)
    m2 = kummer_m(-a / 2 + 0.5, 1.5, -nu * nu)
    return SimilaritySolution(EXACT, nu, 1.0, -m1 / (nu * m2), roots)


def solve_exact_robin(p: ProblemParams, ctrl: SolveControl = DEFAULT_SOLVE) -> SimilaritySolution:
    bi = p.require_bi()
    sc = _series_for(Z_MAX)
    nu, roots = _unique_root(lambda z: robin_residual(z, p.alpha, p.ste, bi, sc), p.ste, ctrl)
    a = p.alpha
    m1 = kummer_m(-a / 2, 0.5, -nu * nu)
    m2 = kummer_m(-a / 2 + 0.5, 1.5, -nu * nu)
    coeff_b = -m1 / (m1 / (2 * bi) + nu * m2)
    coeff_a = -nu * m2 / m1 * coeff_b
    return SimilaritySolution(EXACT_H, nu, coeff_a, coeff_b, roots)


def exact_profile(alpha: float, s: SimilaritySolution, eta: float) -> float:
    """Bracket of the exact temperature as a function of eta (theta_inf = t = 1)."""
    return (s.coeff_a * kummer_m(-alpha / 2, 0.5, -eta * eta)
            + s.coeff_b * eta * kummer_m(-alpha / 2 + 0.5, 1.5, -eta * eta))


def eval_exact_temperature(p: ProblemParams, s: SimilaritySolution, x: float, t: float) -> float:
    if s.method.scheme is not Scheme.EXACT:
        raise DomainError(f"{s.method} is not an exact solution")
    if t <= 0:
        raise DomainError(f"time must be positive, got {t}")
    front = free_boundary(p, s, t)
    if x < 0 or x > front * (1 + 1e-12):
        raise DomainError(f"x={x} is outside the liquid region [0, {front}]")
    eta = min(x, front) / (2 * p.a_diff * math.sqrt(t))
    return p.theta_inf * t ** (p.alpha / 2) * exact_profile(p.alpha, s, eta)
