"""Quadratic-profile integral methods: classical HBIM, modified HBIM and RIM.

Each solver returns a :class:`SimilaritySolution` for the profile

    T(x, t) = t**(alpha/2) * theta_inf * [A (1 - x/s) + B (1 - x/s)**2],
    s(t)    = 2 a nu sqrt(t).

Residual functions ``w_*`` are the polynomial-like equations whose positive
root gives nu. Powers are real, so z must be positive.
"""
from __future__ import annotations

import math

from .errors import DomainError, NoRootError
from .model import Boundary, MethodKind, ProblemParams, Scheme, SimilaritySolution, free_boundary
from .rootfind import DEFAULT_SOLVE, SolveControl, find_roots

P1 = MethodKind(Scheme.CLASSICAL_HBIM, Boundary.DIRICHLET)
P2 = MethodKind(Scheme.MODIFIED_HBIM, Boundary.DIRICHLET)
P3 = MethodKind(Scheme.RIM, Boundary.DIRICHLET)
P1H = MethodKind(Scheme.CLASSICAL_HBIM, Boundary.ROBIN)
P2H = MethodKind(Scheme.MODIFIED_HBIM, Boundary.ROBIN)
P3H = MethodKind(Scheme.RIM, Boundary.ROBIN)

Z_EPS = 1e-9
Z_CAP = 20.0


# ---------------------------------------------------------------- residuals

def w1(z: float, alpha: float, ste: float) -> float:
    """Classical HBIM, fixed temperature. w1(0+) = 18 Ste**2."""
    a = alpha
    return (
        -3 * 2 ** (2 * a + 1) * (a - 2) * z ** (2 * a + 4)
        - 9 * 2 ** (2 * a + 1) * z ** (2 * a + 2)
        - 3 * 2 ** a * (a - 3) * (a + 1) * ste * z ** (a + 4)
        - 3 * 2 ** (a + 1) * (a + 7) * ste * z ** (a + 2)
        + 9 * 2 ** a * ste * z ** a
        + 2 * (a + 1) ** 2 * ste ** 2 * z ** 4
        - 12 * (a + 1) * ste ** 2 * z ** 2
        + 18 * ste ** 2
    )


def w2(z: float, alpha: float, ste: float) -> float:
    a = alpha
    return (2 ** a * (a + 1) * z ** (a + 4) + 3 * 2 ** (a + 1) * z ** (a + 2)
            + ste * (a + 1) * z ** 2 - 3 * ste)


def w3(z: float, alpha: float, ste: float) -> float:
    a = alpha
    return (2 ** (a + 1) * a * z ** (a + 4) + 3 * 2 ** (a + 2) * z ** (a + 2)
            + ste * (2 + 3 * a) * z ** 2 - 6 * ste)


def w1h(z: float, alpha: float, ste: float, bi: float) -> float:
    """Classical HBIM, convective face; tends to w1 as Bi grows."""
    a = alpha
    return (
        -3 * 2 ** (2 * a + 1) * (a - 2) * z ** (2 * a + 4)
        - 3 * 2 ** (2 * a) / bi * (5 * a - 7) * z ** (2 * a + 3)
        - 3 * 2 ** (2 * a + 1) * ((a - 2) / bi ** 2 + 3) * z ** (2 * a + 2)
        - 9 * 2 ** (2 * a) / bi * z ** (2 * a + 1)
        - 3 * 2 ** a * ste * (a - 3) * (a + 1) * z ** (a + 4)
        - 3 * 2 ** (a + 1) / bi * ste * (a - 1) * (a + 1) * z ** (a + 3)
        - 3 * 2 ** (a + 1) * ste * (a + 7) * z ** (a + 2)
        + 3 * 2 ** (a + 1) / bi * ste * (a - 5) * z ** (a + 1)
        + 9 * 2 ** a * ste * z ** a
        + 2 * ste ** 2 * (1 + a) ** 2 * z ** 4
        - 12 * ste ** 2 * (a + 1) * z ** 2
        + 18 * ste ** 2
    )


def w2h(z: float, alpha: float, ste: float, bi: float) -> float:
    a = alpha
    return (w2(z, a, ste)
            + 2 ** (a + 1) / bi * (a + 1) * z ** (a + 3)
            + 3 * 2 ** a / bi * z ** (a + 1))


def w3h(z: float, alpha: float, ste: float, bi: float) -> float:
    a = alpha
    return (w3(z, a, ste)
            + 2 ** a * (2 + 5 * a) / bi * z ** (a + 3)
            + 3 * 2 ** (a + 1) / bi * z ** (a + 1))


# ---------------------------------------------------------------- coefficients

def stefan_a(nu: float, alpha: float, ste: float) -> float:
    """A forced by the original Stefan condition: 2**(alpha+1) nu**(alpha+2) / Ste."""
    return 2 ** (alpha + 1) * nu ** (alpha + 2) / ste


def robin_b(coeff_a: float, nu: float, bi: float) -> float:
    """B from the convective closure A(1 + 2 Bi nu) + 2 B (1 + Bi nu) = 2 Bi nu."""
    return (2 * bi * nu - coeff_a * (1 + 2 * bi * nu)) / (2 * (1 + bi * nu))


def coefficients_p1(nu: float, alpha: float, ste: float) -> tuple[float, float]:
    a = alpha
    den = ste * (3 + (1 + a) * nu ** 2)
    ca = -2 * (3 * 2 ** a * nu ** (a + 2) + ste * (-3 + (1 + a) * nu ** 2)) / den
    cb = 3 * (2 ** (a + 1) * nu ** (a + 2) + ste * (-1 + (1 + a) * nu ** 2)) / den
    return ca, cb


def coefficients_heat_balance(nu: float, alpha: float, ste: float, bi: float | None = None) -> tuple[float, float]:
    """(A, B) solving the integrated heat balance plus the fixed-face condition.

    Dirichlet when ``bi`` is None, convective otherwise. At the modified-HBIM
    root these coincide with the Stefan-condition coefficients.
    """
    a = alpha
    inv_bi = 0.0 if bi is None else 1.0 / bi
    den = ste * (nu ** 2 * (a + 1) + 2 * inv_bi * nu * (a + 1) + 3)
    ca = (6 * ste - 2 * ste * nu ** 2 * (a + 1) - 3 * inv_bi * 2 ** (a + 1) * nu ** (a + 1)
          - 3 * 2 ** (a + 1) * nu ** (a + 2)) / den
    cb = (-3 * ste + 3 * ste * nu ** 2 * (a + 1) + 3 * inv_bi * 2 ** a * nu ** (a + 1)
          + 3 * 2 ** (a + 1) * nu ** (a + 2)) / den
    return ca, cb


def coefficients_rim_robin(nu: float, alpha: float, bi: float) -> tuple[float, float]:
    """(A, B) from the double-integral balance plus the convective closure."""
    a = alpha
    den = 2 * a * nu ** 3 + (5 * a + 2) / bi * nu ** 2 + 6 / bi + 12 * nu
    ca = 12 * nu * (1 - nu ** 2 * (a / 2 + 1 / 3)) / den
    cb = 12 * nu ** 3 * (2 * a / 3 + 1 / 3) / den
    return ca, cb


def heat_balance_defect(s: SimilaritySolution, alpha: float, ste: float) -> float:
    """Residual of the single-integral balance for a quadratic profile."""
    nu, ca, cb = s.nu, s.coeff_a, s.coeff_b
    return (ca * ((alpha + 1) * nu ** 2 - 1) + cb * (2 / 3 * (alpha + 1) * nu ** 2 - 2)
            + stefan_a(nu, alpha, ste))


def rim_defect(s: SimilaritySolution, alpha: float) -> float:
    """Residual of the double-integral balance nu^2 [A(1+2a)/3 + B(2+3a)/6] = B."""
    nu, ca, cb = s.nu, s.coeff_a, s.coeff_b
    return nu ** 2 * (ca * (1 + 2 * alpha) / 3 + cb * (2 + 3 * alpha) / 6) - cb


def robin_defect(s: SimilaritySolution, bi: float) -> float:
    nu, ca, cb = s.nu, s.coeff_a, s.coeff_b
    return ca * (1 + 2 * bi * nu) + 2 * cb * (1 + bi * nu) - 2 * bi * nu


# ---------------------------------------------------------------- solvers

def _roots_unit_interval(fn, ctrl: SolveControl) -> list[float]:
    return [r for r in find_roots(fn, Z_EPS, 1.0, ctrl) if 0.0 < r < 1.0]


def _increasing_root(fn, ctrl: SolveControl) -> float:
    """Root of a residual that is negative at 0+ and increasing."""
    hi = 1.0
    while fn(hi) <= 0.0:
        if hi >= Z_CAP:
            raise NoRootError(f"residual still non-positive at z={hi}")
        hi = min(2 * hi, Z_CAP)
    roots = find_roots(fn, Z_EPS, hi, ctrl)
    if not roots:
        raise NoRootError("no sign change found")
    return roots[0]


def _classical_flags(ste: float, roots: list[float]) -> frozenset[str]:
    flags = set()
    if len(roots) > 1:
        flags.add("multiple_roots")
    if ste >= 1:
        flags.add("hypothesis_violated")
    return frozenset(flags)


def solve_p1(p: ProblemParams, ctrl: SolveControl = DEFAULT_SOLVE) -> SimilaritySolution:
    """Classical HBIM: smallest root of w1 in (0, 1).

    Existence is only guaranteed for Ste < 1; larger Ste is attempted and
    flagged ``hypothesis_violated``.
    """
    roots = _roots_unit_interval(lambda z: w1(z, p.alpha, p.ste), ctrl)
    if not roots:
        raise NoRootError(f"classical HBIM: no root in (0, 1) for alpha={p.alpha}, Ste={p.ste}")
    nu = roots[0]
    ca, cb = coefficients_p1(nu, p.alpha, p.ste)
    return SimilaritySolution(P1, nu, ca, cb, tuple(roots), _classical_flags(p.ste, roots))


def solve_p2(p: ProblemParams, ctrl: SolveControl = DEFAULT_SOLVE) -> SimilaritySolution:
    nu = _increasing_root(lambda z: w2(z, p.alpha, p.ste), ctrl)
    ca = stefan_a(nu, p.alpha, p.ste)
    return SimilaritySolution(P2, nu, ca, 1.0 - ca, (nu,))


def solve_p3(p: ProblemParams, ctrl: SolveControl = DEFAULT_SOLVE) -> SimilaritySolution:
    nu = _increasing_root(lambda z: w3(z, p.alpha, p.ste), ctrl)
    ca = stefan_a(nu, p.alpha, p.ste)
    return SimilaritySolution(P3, nu, ca, 1.0 - ca, (nu,))


def solve_p1h(p: ProblemParams, ctrl: SolveControl = DEFAULT_SOLVE) -> SimilaritySolution:
    """Classical HBIM with a convective face; may have no root when Bi is small."""
    bi = p.require_bi()
    roots = _roots_unit_interval(lambda z: w1h(z, p.alpha, p.ste, bi), ctrl)
    if not roots:
        raise NoRootError(
            f"classical HBIM (convective): no root in (0, 1) for alpha={p.alpha}, "
            f"Ste={p.ste}, Bi={bi}; Bi may be too small"
        )
    nu = roots[0]
    ca, cb = coefficients_heat_balance(nu, p.alpha, p.ste, bi)
    return SimilaritySolution(P1H, nu, ca, cb, tuple(roots), _classical_flags(p.ste, roots))


def solve_p2h(p: ProblemParams, ctrl: SolveControl = DEFAULT_SOLVE) -> SimilaritySolution:
    bi = p.require_bi()
    nu = _increasing_root(lambda z: w2h(z, p.alpha, p.ste, bi), ctrl)
    ca = stefan_a(nu, p.alpha, p.ste)
    return SimilaritySolution(P2H, nu, ca, robin_b(ca, nu, bi), (nu,))


def solve_p3h(p: ProblemParams, ctrl: SolveControl = DEFAULT_SOLVE) -> SimilaritySolution:
    bi = p.require_bi()
    nu = _increasing_root(lambda z: w3h(z, p.alpha, p.ste, bi), ctrl)
    ca = stefan_a(nu, p.alpha, p.ste)
    flags = frozenset({"hypothesis_violated"}) if p.ste >= 1 else frozenset()
    return SimilaritySolution(P3H, nu, ca, robin_b(ca, nu, bi), (nu,), flags)


def residual_for(method: MethodKind, p: ProblemParams):
    """The defining residual z -> w(z) of an integral method, bound to p."""
    a, ste = p.alpha, p.ste
    table = {
        P1: lambda z: w1(z, a, ste),
        P2: lambda z: w2(z, a, ste),
        P3: lambda z: w3(z, a, ste),
    }
    if p.bi is not None:
        bi = p.bi
        table.update({
            P1H: lambda z: w1h(z, a, ste, bi),
            P2H: lambda z: w2h(z, a, ste, bi),
            P3H: lambda z: w3h(z, a, ste, bi),
        })
    try:
        return table[method]
    except KeyError:
        raise DomainError(f"no integral-method residual for {method} with these parameters") from None


def eval_quadratic_temperature(p: ProblemParams, s: SimilaritySolution, x: float, t: float) -> float:
    if s.method.scheme is Scheme.EXACT:
        raise DomainError("exact solutions use eval_exact_temperature")
    if t <= 0:
        raise DomainError(f"time must be positive, got {t}")
    front = free_boundary(p, s, t)
    if x < 0 or x > front * (1 + 1e-12):
        raise DomainError(f"x={x} is outside the liquid region [0, {front}]")
    u = 1.0 - min(x, front) / front
    return t ** (p.alpha / 2) * p.theta_inf * (s.coeff_a * u + s.coeff_b * u * u)
