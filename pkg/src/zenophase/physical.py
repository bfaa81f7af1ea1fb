"""SI-side diagnostics for the absorbing-polarizer setup.

Connects a physical beam-and-absorber description (speeds, lengths, absorber
strength) to the dimensionless drive parameters: absorption rate gamma,
precession rate omega, their ratio b = gamma/omega, and the per-stage
transmission epsilon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import HBAR
from .projections import PolarizerModel, epsilon_from_strength

__all__ = [
    "PhysicalSetup",
    "RatesReport",
    "rates_report",
    "epsilon_report",
    "per_step_epsilon",
    "bias_field_phase",
]


@dataclass(frozen=True)
class PhysicalSetup:
    """Beam-and-absorber description (SI units).

    ``rotation_length_L`` may be omitted; it is fixed by speed, duration and
    half-angle as v*T/(2a) and is validated against that value when given.
    """

    neutron_speed_v: float  # m/s
    absorption_length_l: float  # m, cell length for one stage
    strength_V: float  # J, absorber strength
    total_time_T: float  # s
    half_angle_a: float  # rad
    rotation_length_L: float | None = None  # m

    def __post_init__(self):
        for name in (
            "neutron_speed_v",
            "absorption_length_l",
            "strength_V",
            "total_time_T",
            "half_angle_a",
        ):
            val = getattr(self, name)
            if not (isinstance(val, (int, float)) and math.isfinite(val) and val > 0):
                raise ValueError(f"{name} must be positive and finite")
        derived = self.neutron_speed_v * self.total_time_T / (2.0 * self.half_angle_a)
        if self.rotation_length_L is None:
            object.__setattr__(self, "rotation_length_L", derived)
        elif abs(self.rotation_length_L - derived) > 1e-9 * derived:
            raise ValueError("rotation_length_L is inconsistent with v*T/(2a)")

    @property
    def tau(self) -> float:
        """Dwell time l/v in one absorber cell."""
        return self.absorption_length_l / self.neutron_speed_v

    @property
    def gamma(self) -> float:
        """Absorption rate V/hbar of the rejected spin component."""
        return self.strength_V / HBAR

    @property
    def omega(self) -> float:
        """Precession rate 2a/T of the guiding axis."""
        return 2.0 * self.half_angle_a / self.total_time_T

    @property
    def b_ratio(self) -> float:
        """Absorption-to-rotation ratio gamma/omega."""
        return self.gamma / self.omega


@dataclass(frozen=True)
class RatesReport:
    gamma: float  # 1/s
    omega: float  # rad/s
    b_ratio: float
    ell: float  # m, 1/e absorption length v/gamma
    L: float  # m, length per radian of rotation v/omega
    adiabatic: bool


def rates_report(setup: PhysicalSetup, threshold: float = 10.0) -> RatesReport:
    """Rates and length equivalents of the drive, with an adiabaticity flag.

    ``adiabatic`` is a reporting convention (b_ratio >= threshold, default
    10, where the strong-absorption expansion error is at the percent level),
    not a sharp physical boundary.  The ratio computed three ways
    (gamma/omega, V*T/(2a*hbar), L/ell) must agree to 1e-12 relative.
    """
    v = setup.neutron_speed_v
    gamma, omega = setup.gamma, setup.omega
    ell = v / gamma
    big_l = v / omega
    b = gamma / omega
    b_alt = setup.strength_V * setup.total_time_T / (2.0 * setup.half_angle_a * HBAR)
    b_len = big_l / ell
    if abs(b - b_alt) > 1e-12 * abs(b) or abs(b - b_len) > 1e-12 * abs(b):
        raise RuntimeError("internal inconsistency in rate-ratio derivations")
    return RatesReport(gamma, omega, b, ell, big_l, b >= threshold)


def epsilon_report(setup: PhysicalSetup) -> PolarizerModel:
    """Per-cell transmission of the rejected component, exp(-V tau / hbar)."""
    return epsilon_from_strength(setup.strength_V, setup.tau)


def per_step_epsilon(a: float, b_ratio: float, N: int) -> float:
    """Per-stage transmission that makes an N-stage leaky drive match the
    continuous absorber at ratio b_ratio: epsilon = exp(-2 a b / N).

    This is the normative bridge between the continuous and discrete
    pictures: with uniform stages of duration T/N, V*(T/N)/hbar = 2ab/N.
    """
    if not (math.isfinite(a) and a > 0):
        raise ValueError("half-angle a must be positive")
    if not (math.isfinite(b_ratio) and b_ratio >= 0):
        raise ValueError("b_ratio must be >= 0")
    if N < 1:
        raise ValueError("N must be >= 1")
    return math.exp(-2.0 * a * b_ratio / N)


def bias_field_phase(magnetic_moment: float, field: float, total_time: float) -> float:
    """One-line estimate mu*B*T/hbar of the dynamical phase from a holding
    field, to be subtracted from a measured total phase."""
    for name, val in (
        ("magnetic_moment", magnetic_moment),
        ("field", field),
        ("total_time", total_time),
    ):
        if not math.isfinite(val):
            raise ValueError(f"{name} must be finite")
    return magnetic_moment * field * total_time / HBAR
