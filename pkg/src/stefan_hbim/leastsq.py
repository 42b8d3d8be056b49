"""Least-squares optimal quadratic profiles.

The front coefficient minimizes the integrated squared heat-equation residual
of the quadratic profile, with A tied to nu by the Stefan condition and B by
the fixed-face condition. Everything here works with the t- and
theta-independent part of that error,

    G(xi) = N(xi) / (60 Ste^2 xi^4 (eps + xi)^2),    eps = 1/Bi (0 for Dirichlet),
    N(xi) = xi^2 p(xi) + eps q1(xi) + eps^2 q2(xi),

where p, q1, q2 are sums of real powers of xi. Keeping them as term lists
gives an exact derivative, which is used to polish the scanned minimum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .hbim import robin_b, stefan_a
from .model import Boundary, MethodKind, ProblemParams, Scheme, SimilaritySolution
from .rootfind import DEFAULT_SOLVE, Bracket, SolveControl, bisect, find_roots, local_minima

P4 = MethodKind(Scheme.LEAST_SQUARES, Boundary.DIRICHLET)
P4H = MethodKind(Scheme.LEAST_SQUARES, Boundary.ROBIN)

XI_LO = 1e-6
# the optimum tends to sqrt(3) as Ste grows at alpha = 0 and is smaller for alpha > 0
XI_HI = 2.0

Terms = list[tuple[float, float]]  # (coefficient, exponent)


@dataclass(frozen=True)
class LsqErrorParts:
    """Trial front coefficient and its error density without the t^(alpha-2) theta^2 factor."""

    xi: float
    e_value: float

    def __post_init__(self):
        if self.e_value < 0:
            raise DomainError("least-squares error cannot be negative")


def lsq_error_direct(xi: float, alpha: float, coeff_a: float, coeff_b: float) -> float:
    """Squared-residual error of an arbitrary quadratic profile, per unit front length.

    Integral over (0, s) of (T_t - a^2 T_xx)^2, divided by s, with the common
    factor t^(alpha-2) theta^2 removed. Written directly in (A, B) so it can
    serve as an oracle for the expanded polynomials.
    """
    if xi <= 0:
        raise DomainError(f"xi must be positive, got {xi}")
    a, ca, cb = alpha, coeff_a, coeff_b
    quartic = (a * a * (ca * ca / 3 + ca * cb / 2 + cb * cb / 5)
               + 2 * a * (ca * ca / 6 + ca * cb / 4 + cb * cb / 10)
               + ca * ca / 3 + ca * cb / 3 + 2 * cb * cb / 15)
    bracket = xi ** 4 / 4 * quartic - xi ** 2 / 2 * cb * (a + 1) * (ca / 2 + cb / 3) + cb * cb / 4
    return bracket / xi ** 4


# ---------------------------------------------------------------- term lists

def _p_terms(alpha: float, ste: float) -> Terms:
    a, s = alpha, ste
    return [
        (2 ** (2 * a + 1) * (a * a + a + 4), 2 * a + 8),
        (5 * 2 ** (2 * a + 2) * (1 + a), 2 * a + 6),
        (15 * 2 ** (2 * a + 2), 2 * a + 4),
        (2 ** a * s * (2 + 3 * a + 3 * a * a), a + 6),
        (5 * 2 ** (a + 1) * s * (1 + a), a + 4),
        # single 2^(alpha+2) factor: the only reading that reduces to the alpha=0 form
        (-15 * 2 ** (a + 2) * s, a + 2),
        (s * s * (2 + 3 * a + 3 * a * a), 4),
        (-10 * s * s * (1 + a), 2),
        (15 * s * s, 0),
    ]


def _q1_terms(alpha: float, ste: float) -> Terms:
    a, s, u, u2 = alpha, ste, 2 ** alpha, 4 ** alpha
    return [
        (u * s * (9 * a * a + 9 * a + 6), a + 7),
        (-10 * u * s * (a + 1), a + 5),
        (-30 * u * s, a + 3),
        (u2 * (7 * a * a + 7 * a + 18), 2 * a + 9),
        (50 * u2 * (a + 1), 2 * a + 7),
        (60 * u2, 2 * a + 5),
    ]


def _q2_terms(alpha: float) -> Terms:
    a, u2 = alpha, 4 ** alpha
    return [
        (4 * u2 * (2 * a * a + 2 * a + 3), 2 * a + 8),
        (20 * u2 * (a + 1), 2 * a + 6),
        (15 * u2, 2 * a + 4),
    ]


def _numerator_terms(alpha: float, ste: float, eps: float) -> Terms:
    out = [(c, e + 2) for c, e in _p_terms(alpha, ste)]
    if eps:
        out += [(eps * c, e) for c, e in _q1_terms(alpha, ste)]
        out += [(eps * eps * c, e) for c, e in _q2_terms(alpha)]
    return out


def _eval(terms: Terms, x: float) -> float:
    return math.fsum(c * x ** e for c, e in terms)


def _eval_deriv(terms: Terms, x: float) -> float:
    return math.fsum(c * e * x ** (e - 1) for c, e in terms if e != 0)


# ---------------------------------------------------------------- public polynomials

def p4_polynomial(xi: float, alpha: float, ste: float) -> float:
    """p(xi); equals 60 Ste^2 xi^4 times the Dirichlet error density."""
    return _eval(_p_terms(alpha, ste), xi)


def p4_classical(xi: float, ste: float) -> float:
    """The alpha = 0 specialization of p, written out independently."""
    s = ste
    return (8 * xi ** 8 + 2 * (10 + s) * xi ** 6 + 2 * (30 + 5 * s + s * s) * xi ** 4
            - 10 * s * (6 + s) * xi ** 2 + 15 * s * s)


def r_poly(xi: float, ste: float) -> float:
    """xi^5 times d/dxi of p4_classical(xi)/xi^4; its positive root is the alpha=0 optimum."""
    s = ste
    return 32 * xi ** 8 + 4 * (10 + s) * xi ** 6 + 20 * s * (6 + s) * xi ** 2 - 60 * s * s


def rh_poly(xi: float, ste: float, bi: float) -> float:
    """Convective alpha=0 optimality polynomial (positive multiple of dG/dxi)."""
    b, s, x = bi, ste, xi
    return (16 * b ** 3 * x ** 9 + 51 * b ** 2 * x ** 8
            + x ** 7 * (2 * b ** 3 * s + 20 * b ** 3 + 57 * b)
            + x ** 6 * (7 * b ** 2 * s + 65 * b ** 2 + 24)
            + x ** 5 * b * (9 * s + 75)
            + x ** 4 * (b ** 2 * (2 * s * s + 15 * s + 30) + 20)
            + x ** 3 * 5 * b * (3 + (-1 + 12 * b ** 2) * s + 2 * b ** 2 * s * s)
            + 45 * b ** 2 * s * x ** 2
            + 15 * b * s * (1 - 2 * b ** 2 * s) * x
            - 15 * b ** 2 * s * s)


def lsq_objective(xi: float, alpha: float, ste: float, bi: float | None = None) -> float:
    """G(xi): error density after substituting the constrained (A, B)."""
    if xi <= 0:
        raise DomainError(f"xi must be positive, got {xi}")
    eps = 0.0 if bi is None else 1.0 / bi
    num = _eval(_numerator_terms(alpha, ste, eps), xi)
    return num / (60 * ste * ste * xi ** 4 * (eps + xi) ** 2)


def lsq_slope_sign(xi: float, alpha: float, ste: float, bi: float | None = None) -> float:
    """A positive multiple of dG/dxi: xi (eps+xi) N' - (4 eps + 6 xi) N."""
    eps = 0.0 if bi is None else 1.0 / bi
    terms = _numerator_terms(alpha, ste, eps)
    return xi * (eps + xi) * _eval_deriv(terms, xi) - (4 * eps + 6 * xi) * _eval(terms, xi)


def constrained_coefficients(xi: float, alpha: float, ste: float, bi: float | None = None) -> tuple[float, float]:
    ca = stefan_a(xi, alpha, ste)
    return ca, (1.0 - ca) if bi is None else robin_b(ca, xi, bi)


def error_parts(xi: float, p: ProblemParams) -> LsqErrorParts:
    return LsqErrorParts(xi, lsq_objective(xi, p.alpha, p.ste, p.bi))


# ---------------------------------------------------------------- solvers

def _polish(slope, x: float, width: float, ctrl: SolveControl) -> float:
    lo, hi = max(x - width, XI_LO), x + width
    if slope(lo) < 0 < slope(hi):
        return bisect(slope, Bracket(lo, hi), ctrl)
    return x


def _minimize(alpha: float, ste: float, bi: float | None, ctrl: SolveControl) -> tuple[float, list[float]]:
    def obj(x):
        return lsq_objective(x, alpha, ste, bi)

    def slope(x):
        return lsq_slope_sign(x, alpha, ste, bi)

    cands = local_minima(obj, XI_LO, XI_HI, ctrl)
    step = (XI_HI - XI_LO) / ctrl.scan_points
    cands = sorted(_polish(slope, x, 2 * step, ctrl) for x in cands)
    return min(cands, key=lambda x: (obj(x), x)), cands


def solve_p4(p: ProblemParams, ctrl: SolveControl = DEFAULT_SOLVE) -> SimilaritySolution:
    """Dirichlet least-squares profile: global minimizer of G on (0, 2]."""
    nu, cands = _minimize(p.alpha, p.ste, None, ctrl)
    ca, cb = constrained_coefficients(nu, p.alpha, p.ste)
    flags = frozenset({"multiple_minima"}) if len(cands) > 1 else frozenset()
    return SimilaritySolution(P4, nu, ca, cb, tuple(cands), flags)


def classical_hypothesis_holds(ste: float, bi: float) -> bool:
    """Sufficient condition for a unique convective optimum at alpha = 0."""
    return bi > 1 / math.sqrt(12) and ste < 1 / (2 * bi * bi)


def solve_p4h(p: ProblemParams, ctrl: SolveControl = DEFAULT_SOLVE) -> SimilaritySolution:
    """Convective least-squares profile.

    At alpha = 0 outside the uniqueness condition the minimizer is still
    returned, flagged ``hypothesis_violated``.
    """
    bi = p.require_bi()
    nu, cands = _minimize(p.alpha, p.ste, bi, ctrl)
    ca, cb = constrained_coefficients(nu, p.alpha, p.ste, bi)
    flags = set()
    if len(cands) > 1:
        flags.add("multiple_minima")
    if p.alpha == 0 and not classical_hypothesis_holds(p.ste, bi):
        flags.add("hypothesis_violated")
    return SimilaritySolution(P4H, nu, ca, cb, tuple(cands), frozenset(flags))


def classical_root(ste: float, bi: float | None = None, ctrl: SolveControl = DEFAULT_SOLVE) -> float:
    """alpha = 0 optimum as the positive root of r (Dirichlet) or r_h (convective)."""
    if bi is None:
        def fn(x):
            return r_poly(x, ste)
    else:
        def fn(x):
            return rh_poly(x, ste, bi)
    roots = find_roots(fn, 0.0, XI_HI, ctrl)
    if not roots:
        raise DomainError("optimality polynomial has no root in (0, 2]")
    return roots[0]
