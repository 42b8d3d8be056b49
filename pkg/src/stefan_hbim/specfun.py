"""Kummer's confluent hypergeometric function M(a, b, z) and helpers.

Only real arguments are supported. Negative arguments go through Kummer's
transformation ``M(a, b, z) = exp(z) M(b - a, b, -z)`` so the series that is
actually summed has non-alternating terms whenever ``b - a > 0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError


@dataclass(frozen=True)
class SeriesControl:
    rel_tol: float = 1e-14
    max_terms: int = 500

    def __post_init__(self):
        if not (0.0 < self.rel_tol < 1e-6):
            raise DomainError(f"rel_tol must lie in (0, 1e-6), got {self.rel_tol}")
        if self.max_terms < 50:
            raise DomainError(f"max_terms must be >= 50, got {self.max_terms}")


DEFAULT_SERIES = SeriesControl()


def pochhammer(a: float, s: int) -> float:
    """Rising factorial (a)_s = a (a+1) ... (a+s-1), with (a)_0 = 1."""
    if s < 0:
        raise DomainError("pochhammer index must be non-negative")
    out = 1.0
    for j in range(s):
        out *= a + j
    return out


def _check_b(b: float) -> None:
    if b <= 0 and float(b).is_integer():
        raise DomainError(f"b cannot be a nonpositive integer (got b={b})")


def kummer_series(a: float, b: float, z: float, ctrl: SeriesControl = DEFAULT_SERIES) -> float:
    """Direct power-series sum of M(a, b, z), with no transformation.

    Stops once two consecutive terms fall below ``rel_tol`` times the partial
    sum and the index has passed |z| (beyond that the term ratio is < 1).
    """
    _check_b(b)
    total = 1.0
    term = 1.0
    small = 0
    for s in range(ctrl.max_terms):
        term *= (a + s) / (b + s) * z / (s + 1)
        total += term
        if abs(term) <= ctrl.rel_tol * abs(total):
            small += 1
            if small >= 2 and s + 1 > abs(z):
                return total
        else:
            small = 0
    raise ConvergenceError(
        f"M({a}, {b}, {z}) did not converge within {ctrl.max_terms} terms"
    )


def kummer_m(a: float, b: float, z: float, ctrl: SeriesControl = DEFAULT_SERIES) -> float:
    """Kummer function M(a, b, z) = sum_s (a)_s / ((b)_s s!) z^s."""
    _check_b(b)
    if z == 0.0:
        return 1.0
    if z < 0.0:
        return math.exp(z) * kummer_series(b - a, b, -z, ctrl)
    return kummer_series(a, b, z, ctrl)


def f_aux(z: float, alpha: float, ctrl: SeriesControl = DEFAULT_SERIES) -> float:
    """f(z) = 1 / (z M(alpha/2 + 1, 3/2, z^2)); positive and decreasing on z > 0."""
    if z <= 0.0:
        raise DomainError(f"f_aux needs z > 0, got {z}")
    return 1.0 / (z * kummer_m(alpha / 2.0 + 1.0, 1.5, z * z, ctrl))
