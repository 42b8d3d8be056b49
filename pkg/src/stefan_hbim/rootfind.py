"""Bracketing root finder and bounded scalar minimizer.

Everything here is deliberately derivative-free: the residuals downstream
carry real powers like z**(2*alpha + 4) and robustness matters more than
speed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import BadBracketError, DomainError

Fn = Callable[[float], float]

TIE_RTOL = 1e-12
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class SolveControl:
    abs_tol: float = 1e-12
    max_iter: int = 200
    scan_points: int = 2000

    def __post_init__(self):
        if self.abs_tol <= 0:
            raise DomainError("abs_tol must be positive")
        if self.max_iter < 50:
            raise DomainError("max_iter must be >= 50")
        if self.scan_points < 100:
            raise DomainError("scan_points must be >= 100")


DEFAULT_SOLVE = SolveControl()


def _grid(lo: float, hi: float, n: int) -> list[float]:
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n - 1)] + [hi]


def scan_brackets(fn: Fn, lo: float, hi: float, scan_points: int = 2000) -> list[Bracket]:
    """Sign-change subintervals of a uniform ``scan_points`` grid, left to right.

    A grid node where fn is exactly zero yields the cell starting at it.
    """
    if not lo < hi:
        raise DomainError("scan needs lo < hi")
    xs = _grid(lo, hi, scan_points)
    vals = [fn(x) for x in xs]
    out: list[Bracket] = []
    for i in range(len(xs) - 1):
        v0, v1 = vals[i], vals[i + 1]
        if v0 == 0.0 or v0 * v1 < 0.0:
            out.append(Bracket(xs[i], xs[i + 1]))
    if vals[-1] == 0.0:
        out.append(Bracket(xs[-2], xs[-1]))
    return out


def bisect(fn: Fn, b: Bracket, ctrl: SolveControl = DEFAULT_SOLVE) -> float:
    lo, hi = b.lo, b.hi
    flo, fhi = fn(lo), fn(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise BadBracketError(f"no sign change on [{lo}, {hi}]: f={flo:.3g}, {fhi:.3g}")
    for _ in range(ctrl.max_iter):
        if hi - lo <= ctrl.abs_tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = fn(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return 0.5 * (lo + hi)


def find_roots(fn: Fn, lo: float, hi: float, ctrl: SolveControl = DEFAULT_SOLVE) -> list[float]:
    """All roots found by a uniform scan followed by bisection, ascending."""
    return [bisect(fn, br, ctrl) for br in scan_brackets(fn, lo, hi, ctrl.scan_points)]


def golden_section(fn: Fn, lo: float, hi: float, ctrl: SolveControl = DEFAULT_SOLVE) -> float:
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(ctrl.max_iter):
        if b - a <= ctrl.abs_tol:
            break
        # ties keep the left part, so the smaller argument wins
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = fn(d)
    best = min(((fc, c), (fd, d), (fn(0.5 * (a + b)), 0.5 * (a + b))))
    return best[1]


def local_minima(fn: Fn, lo: float, hi: float, ctrl: SolveControl = DEFAULT_SOLVE) -> list[float]:
    """Refined location of every local minimum seen on the coarse scan."""
    if not lo < hi:
        raise DomainError("minimize needs lo < hi")
    xs = _grid(lo, hi, ctrl.scan_points)
    vals = [fn(x) for x in xs]
    n = len(xs)
    out = []
    for i in range(n):
        left = vals[i - 1] if i > 0 else math.inf
        right = vals[i + 1] if i < n - 1 else math.inf
        if vals[i] < left and vals[i] <= right:
            out.append(golden_section(fn, xs[max(i - 1, 0)], xs[min(i + 1, n - 1)], ctrl))
    if not out:
        i = vals.index(min(vals))
        out.append(golden_section(fn, xs[max(i - 1, 0)], xs[min(i + 1, n - 1)], ctrl))
    return out


def minimize_scalar(fn: Fn, lo: float, hi: float, ctrl: SolveControl = DEFAULT_SOLVE) -> float:
    """Global argmin on [lo, hi]: coarse scan, then golden-section refinement.

    Among equal minima the smallest argument is returned.
    """
    cands = local_minima(fn, lo, hi, ctrl)
    best_x, best_f = cands[0], fn(cands[0])
    for x in cands[1:]:
        fx = fn(x)
        # values this close count as a tie, which the left candidate wins
        if fx < best_f - TIE_RTOL * max(abs(best_f), 1.0):
            best_x, best_f = x, fx
    return best_x
