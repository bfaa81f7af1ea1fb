"""Solid angles on the spin sphere and the geometric/dynamical phase split
for cyclic spin-1/2 evolutions.

All loops live on the cone of fixed axis cosine cos_theta; vertex wedges are
isosceles triangles subtended from the cone axis.  Solid angles are in
steradians, phases in radians; the factor one-half between them is applied
only in ``phase_table``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "NonCyclicError",
    "PolygonSpec",
    "PhaseTable",
    "SCENARIOS",
    "solid_angle_isosceles",
    "solid_angle_regular",
    "solid_angle_polygon",
    "phase_table",
]

SCENARIOS = ("projections_only", "field_only", "field_plus_projections")

_CLOSURE_TOL = 1e-12


class NonCyclicError(ValueError):
    """Field-only evolution that does not close the loop."""


def _check_cos(cos_theta: float) -> None:
    if not -1.0 <= cos_theta <= 1.0:
        raise ValueError("cos_theta must lie in [-1, 1]")


def solid_angle_isosceles(alpha: float, cos_theta: float) -> float:
    """Solid angle of an isosceles wedge with vertex angle 2*alpha on the
    cone: 2*alpha - 2*arctan(cos_theta tan alpha).

    Zero on the polar axis (cos_theta = 1), 2*alpha on the equator; alpha is
    restricted to (0, pi/2) where tan is single-valued.
    """
    if not 0.0 < alpha < math.pi / 2.0:
        raise ValueError("alpha must lie in (0, pi/2)")
    _check_cos(cos_theta)
    return 2.0 * alpha - 2.0 * math.atan(cos_theta * math.tan(alpha))


def solid_angle_regular(N: int, cos_theta: float) -> float:
    """Solid angle of the regular N-gon on the cone:
    2*pi - 2*N*arctan(cos_theta tan(pi/N)); equals twice the N-stage loop
    phase beta_N."""
    if not isinstance(N, (int, np.integer)) or N < 3:
        raise ValueError("N must be an integer >= 3")
    _check_cos(cos_theta)
    return 2.0 * math.pi - 2.0 * N * math.atan(cos_theta * math.tan(math.pi / N))


@dataclass(frozen=True)
class PolygonSpec:
    """Closed fan of isosceles wedges: vertex half-angles alpha_n > 0 with
    sum 2*alpha_n = 2*pi (within 1e-12), each alpha_n in (0, pi/2)."""

    cos_theta: float
    half_angles: np.ndarray

    def __post_init__(self):
        _check_cos(self.cos_theta)
        ha = np.asarray(self.half_angles, dtype=float)
        if ha.ndim != 1 or ha.size == 0:
            raise ValueError("half_angles must be a nonempty 1-d sequence")
        if np.any(ha <= 0.0) or np.any(ha >= math.pi / 2.0):
            raise ValueError("each half-angle must lie in (0, pi/2)")
        if abs(2.0 * float(ha.sum()) - 2.0 * math.pi) > _CLOSURE_TOL:
            raise ValueError(
                "half-angles do not close the loop (sum 2*alpha_n must be 2*pi)"
            )
        object.__setattr__(self, "half_angles", ha)


def solid_angle_polygon(spec: PolygonSpec) -> float:
    """Solid angle of a general (not necessarily regular) closed polygon on
    the cone: additive over vertices,
    2*pi - 2*sum arctan(cos_theta tan alpha_n).

    Reduces to ``solid_angle_regular`` for equal angles and tends to
    2*pi*(1 - cos_theta) as the largest half-angle goes to zero.
    """
    return float(
        2.0 * math.pi
        - 2.0 * np.arctan(spec.cos_theta * np.tan(spec.half_angles)).sum()
    )


@dataclass(frozen=True)
class PhaseTable:
    """Geometric/dynamical/total phase split of one cyclic scenario."""

    geom: float
    dyn: float
    total: float
    scenario: str


def phase_table(scenario: str, cos_theta: float, mu_T: float = 0.0) -> PhaseTable:
    """Phase decomposition for a cyclic evolution on the cone.

    Scenarios (Omega = 2*pi*(1 - cos_theta), n_z = cos_theta):

    * ``projections_only``       geom = Omega/2, dyn = 0
    * ``field_only``             geom = Omega/2, dyn = pi - Omega/2; the loop
      closes through the field alone, which requires mu_T = pi
    * ``field_plus_projections`` geom = Omega/2, dyn = mu_T * n_z (field along
      the guiding axis; the loop closes through the projections, so mu_T is
      arbitrary)
    """
    if scenario not in SCENARIOS:
        raise ValueError(f"unknown scenario {scenario!r}; expected one of {SCENARIOS}")
    _check_cos(cos_theta)
    omega = 2.0 * math.pi * (1.0 - cos_theta)
    geom = omega / 2.0
    if scenario == "projections_only":
        dyn = 0.0
    elif scenario == "field_only":
        if abs(mu_T - math.pi) > 1e-12:
            raise NonCyclicError("field-only evolution is cyclic only at mu_T = pi")
        dyn = math.pi - omega / 2.0
    else:
        dyn = mu_T * cos_theta
    return PhaseTable(geom=geom, dyn=dyn, total=geom + dyn, scenario=scenario)
