"""Projection-stage families on the spin-1/2 sphere.

A family of guiding states sweeps from spin up through angle a about a fixed
axis n in N equal stages.  Alongside the ideal rank-1 projectors this module
provides their leaky-polarizer variants, which transmit the rejected spin
component with amplitude epsilon instead of removing it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import HBAR
from .su2 import DOWN, UP, rot, unit_vector

__all__ = [
    "ProjectionFamily",
    "PolarizerModel",
    "phi",
    "phi_perp",
    "projector",
    "projector_perp",
    "imperfect",
    "sqrt_imperfect",
    "epsilon_from_strength",
]


@dataclass(frozen=True)
class ProjectionFamily:
    """N-stage guiding family: stage k points at angle a*k/N about axis n."""

    n: np.ndarray
    a: float
    N: int

    def __post_init__(self):
        nx, ny, nz = np.asarray(self.n, dtype=float)
        object.__setattr__(self, "n", unit_vector(nx, ny, nz))
        if not math.isfinite(self.a):
            raise ValueError("total half-angle a must be finite")
        if not isinstance(self.N, (int, np.integer)) or self.N < 1:
            raise ValueError("stage count N must be a positive integer")
        object.__setattr__(self, "N", int(self.N))

    def theta(self, k: int) -> float:
        """Stage angle a*k/N; a single multiply and divide, so no
        accumulation drift even at N = 10^6."""
        return self.a * k / self.N


def _check_stage(fam: ProjectionFamily, k: int) -> None:
    if not 0 <= k <= fam.N:
        raise IndexError(f"stage index {k} outside 0..{fam.N}")


def phi(fam: ProjectionFamily, k: int) -> np.ndarray:
    """Guiding state of stage k: rot(a k/N, n) applied to spin up."""
    _check_stage(fam, k)
    return rot(fam.theta(k), fam.n) @ UP


def phi_perp(fam: ProjectionFamily, k: int) -> np.ndarray:
    """State orthogonal to phi(fam, k) (same rotation applied to spin down)."""
    _check_stage(fam, k)
    return rot(fam.theta(k), fam.n) @ DOWN


def projector(fam: ProjectionFamily, k: int) -> np.ndarray:
    """Rank-1 projector onto the stage-k guiding state."""
    v = phi(fam, k)
    return np.outer(v, v.conj())


def projector_perp(fam: ProjectionFamily, k: int) -> np.ndarray:
    """Complementary projector; equals identity minus projector(fam, k)."""
    v = phi_perp(fam, k)
    return np.outer(v, v.conj())


@dataclass(frozen=True)
class PolarizerModel:
    """Leaky polarizer: per-stage amplitude transmission of the rejected spin
    component.  epsilon = 0 is an ideal projector, epsilon = 1 is transparent."""

    epsilon: float

    def __post_init__(self):
        if not (math.isfinite(self.epsilon) and 0.0 <= self.epsilon <= 1.0):
            raise ValueError("epsilon must lie in [0, 1]")


def imperfect(fam: ProjectionFamily, k: int, pol: PolarizerModel) -> np.ndarray:
    """Stage-k leaky projector: rot diag(1, epsilon) rot^dagger."""
    _check_stage(fam, k)
    r = rot(fam.theta(k), fam.n)
    return r @ np.diag([1.0 + 0.0j, pol.epsilon + 0.0j]) @ r.conj().T


def sqrt_imperfect(fam: ProjectionFamily, k: int, pol: PolarizerModel) -> np.ndarray:
    """Operator square root of ``imperfect`` (same axes, sqrt(epsilon) leak)."""
    _check_stage(fam, k)
    r = rot(fam.theta(k), fam.n)
    return r @ np.diag([1.0 + 0.0j, math.sqrt(pol.epsilon) + 0.0j]) @ r.conj().T


def epsilon_from_strength(V: float, tau: float) -> PolarizerModel:
    """Transmission epsilon = exp(-V tau / hbar) of an absorber of strength V
    (joule) acting for a dwell time tau (second)."""
    if not (math.isfinite(V) and V >= 0.0):
        raise ValueError("absorber strength V must be >= 0")
    if not (math.isfinite(tau) and tau > 0.0):
        raise ValueError("dwell time tau must be > 0")
    return PolarizerModel(math.exp(-V * tau / HBAR))
