"""Parameters, method tags and the similarity-solution record shared by all solvers."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import DomainError


class Scheme(enum.Enum):
    EXACT = "exact"
    CLASSICAL_HBIM = "classical_hbim"
    MODIFIED_HBIM = "modified_hbim"
    RIM = "rim"
    LEAST_SQUARES = "least_squares"


class Boundary(enum.Enum):
    DIRICHLET = "dirichlet"
    ROBIN = "robin"


_SCHEME_CODE = {
    Scheme.EXACT: "exact",
    Scheme.CLASSICAL_HBIM: "p1",
    Scheme.MODIFIED_HBIM: "p2",
    Scheme.RIM: "p3",
    Scheme.LEAST_SQUARES: "p4",
}


@dataclass(frozen=True)
class MethodKind:
    scheme: Scheme
    boundary: Boundary

    @property
    def name(self) -> str:
        """Short code: exact, p1..p4 for Dirichlet; exacth, p1h..p4h for Robin."""
        code = _SCHEME_CODE[self.scheme]
        return code + ("h" if self.boundary is Boundary.ROBIN else "")

    @property
    def is_robin(self) -> bool:
        return self.boundary is Boundary.ROBIN

    def dirichlet_limit(self) -> "MethodKind":
        return MethodKind(self.scheme, Boundary.DIRICHLET)

    @classmethod
    def from_name(cls, name: str) -> "MethodKind":
        try:
            return METHODS[name.strip().lower()]
        except KeyError:
            raise DomainError(
                f"unknown method {name!r}; expected one of {', '.join(METHODS)}"
            ) from None

    def __str__(self) -> str:
        return self.name


METHODS: dict[str, MethodKind] = {
    MethodKind(s, b).name: MethodKind(s, b) for b in Boundary for s in Scheme
}


@dataclass(frozen=True)
class ProblemParams:
    """Dimensionless inputs of the one-phase problem.

    ``ste`` is the generalized Stefan number k*theta_inf/(gamma*a**(alpha+2));
    ``bi`` = a*h/k is only needed by the convective (Robin) variants.
    """

    alpha: float
    ste: float
    bi: Optional[float] = None
    theta_inf: float = 1.0
    a_diff: float = 1.0

    def __post_init__(self):
        if not (self.alpha >= 0 and math.isfinite(self.alpha)):
            raise DomainError(f"alpha must be a finite value >= 0, got {self.alpha}")
        if not (self.ste > 0 and math.isfinite(self.ste)):
            raise DomainError(f"Ste must be positive, got {self.ste}")
        if self.bi is not None and not (self.bi > 0 and math.isfinite(self.bi)):
            raise DomainError(f"Bi must be positive, got {self.bi}")
        if not self.theta_inf > 0:
            raise DomainError(f"theta_inf must be positive, got {self.theta_inf}")
        if not self.a_diff > 0:
            raise DomainError(f"a_diff must be positive, got {self.a_diff}")

    def require_bi(self) -> float:
        if self.bi is None:
            raise DomainError("this problem has a convective face and needs Bi")
        return self.bi

    def gamma(self, k: float = 1.0) -> float:
        """Latent-heat prefactor implied by Ste for a given conductivity."""
        return k * self.theta_inf / (self.ste * self.a_diff ** (self.alpha + 2))


@dataclass(frozen=True)
class SimilaritySolution:
    """(nu, A, B) for one method; A and B are normalised by theta_inf.

    ``roots`` holds every admissible root/minimiser the solver saw (the chosen
    one included) and ``flags`` carries warnings such as ``multiple_roots`` or
    ``hypothesis_violated``.
    """

    method: MethodKind
    nu: float
    coeff_a: float
    coeff_b: float
    roots: tuple[float, ...] = ()
    flags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.nu > 0:
            raise DomainError(f"nu must be positive, got {self.nu}")

    def front(self, p: ProblemParams, t: float) -> float:
        return free_boundary(p, self, t)


def free_boundary(p: ProblemParams, s: SimilaritySolution, t: float) -> float:
    """s(t) = 2 a nu sqrt(t)."""
    if t < 0:
        raise DomainError(f"time must be non-negative, got {t}")
    return 2.0 * p.a_diff * s.nu * math.sqrt(t)
