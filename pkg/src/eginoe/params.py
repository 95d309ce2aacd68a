"""Ensemble parameters shared by every module."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import as_rational


@dataclass(frozen=True)
class ModelParams:
    """Elliptic real Ginibre instance: even size ``n`` and rational ``tau`` in [0, 1]."""

    n: int
    tau: Fraction

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise TypeError("matrix size must be an integer")
        if self.n < 2 or self.n % 2:
            raise ValueError(f"matrix size must be even and >= 2, got {self.n}")
        tau = as_rational(self.tau)
        if not 0 <= tau <= 1:
            raise ValueError(f"tau must lie in [0, 1], got {tau}")
        object.__setattr__(self, "tau", tau)

    @property
    def s(self) -> Fraction:
        """1 + tau, the variance scale of the real-line weight."""
        return 1 + self.tau

    @property
    def moment_radicand(self) -> Fraction:
        """Every exact moment is a rational multiple of sqrt((1+tau)/2)."""
        return (1 + self.tau) / 2

    def __str__(self):
        return f"N={self.n}, tau={self.tau}"
