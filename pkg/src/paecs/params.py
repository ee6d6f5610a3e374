"""Parameter types: state families, state specification, truncation policy."""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field

from .errors import DegenerateStateError, DomainError

# Photon-addition orders beyond this leave the regime the closed forms were
# validated in (double precision starts losing the Laguerre combinations).
MAX_ADDITION = 40

MAX_DIM_ENV = "PAECS_MAX_DIM"


class Family(enum.Enum):
    """The four two-mode superposition families.

    Kind 1 superposes |alpha, alpha> and |-alpha, -alpha>; kind 2 superposes
    |alpha, -alpha> and |-alpha, alpha>.  The sign is the relative sign
    between the two branches before photon addition.
    """

    PSI1_PLUS = "psi1+"
    PSI1_MINUS = "psi1-"
    PSI2_PLUS = "psi2+"
    PSI2_MINUS = "psi2-"

    @property
    def kind(self) -> int:
        return 1 if self.value.startswith("psi1") else 2

    @property
    def sign(self) -> int:
        return 1 if self.value.endswith("+") else -1

    @classmethod
    def from_string(cls, text: str) -> "Family":
        for fam in cls:
            if fam.value == text:
                return fam
        raise DomainError(
            f"unknown family {text!r}; expected one of "
            + ", ".join(f.value for f in cls)
        )


@dataclass(frozen=True)
class PaecsSpec:
    """Photon-added entangled coherent state parameters.

    ``m`` creation operators act on mode a and ``n`` on mode b of the
    entangled coherent superposition selected by ``family``.
    """

    family: Family
    alpha: complex
    m: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or not isinstance(self.n, int):
            raise DomainError("photon-addition orders m, n must be integers")
        if self.m < 0 or self.n < 0:
            raise DomainError("photon-addition orders m, n must be >= 0")
        if self.m > MAX_ADDITION or self.n > MAX_ADDITION:
            raise DomainError(f"photon-addition orders capped at {MAX_ADDITION}")
        alpha = complex(self.alpha)
        if not (math.isfinite(alpha.real) and math.isfinite(alpha.imag)):
            raise DomainError("alpha must be finite")
        object.__setattr__(self, "alpha", alpha)
        if self.family.sign < 0 and alpha == 0:
            raise DegenerateStateError(
                f"{self.family.value} vanishes identically at alpha = 0"
            )


def _default_max_dim() -> int:
    raw = os.environ.get(MAX_DIM_ENV)
    if raw is None:
        return 256
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"{MAX_DIM_ENV} must be an integer, got {raw!r}") from exc
    if value < 2:
        raise DomainError(f"{MAX_DIM_ENV} must be >= 2, got {value}")
    return value


@dataclass(frozen=True)
class TruncationPolicy:
    """How large a Fock cutoff the brute-force routines may use.

    ``base_dim`` is a floor on the per-mode dimension; the builder raises it
    to the recommended size for the requested state and then doubles until
    the tail mass drops below ``tail_tol`` or ``max_dim`` is hit.
    """

    base_dim: int = 1
    tail_tol: float = 1e-14
    max_dim: int = field(default_factory=_default_max_dim)

    def __post_init__(self) -> None:
        if self.base_dim < 1:
            raise DomainError("base_dim must be a positive integer")
        if not (0 < self.tail_tol < 1):
            raise DomainError("tail_tol must lie in (0, 1)")
        if self.max_dim < self.base_dim:
            raise DomainError("max_dim must be >= base_dim")


def recommended_dim(alpha: complex, added: int) -> int:
    """Per-mode cutoff that keeps the coherent tail far below tail_tol.

    The coherent occupation is Poissonian with mean |alpha|^2; ten standard
    deviations plus a flat margin leaves the discarded mass around 1e-20.
    """
    mean = abs(alpha) ** 2
    return added + math.ceil(mean + 10.0 * math.sqrt(mean + 1.0)) + 8
