"""Closed-form results for measurement-guided spin-1/2 evolution.

Finite-N survival and phase of a closed guiding loop, their continuum limits,
the dynamical-phase integral for a static field, and the exact end-to-end
operator of the continuously absorbing (leaky) polarizer model.  Every
function here is the analytic counterpart of a brute-force product in
``zenophase.engine``; the test suite compares the two routes throughout.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import simpson

from .su2 import UP, mat_exp, pauli_dot, rot

__all__ = [
    "DegenerateNError",
    "rho_beta",
    "continuum_phase",
    "final_phase_with_H",
    "dynamical_phase_quadrature",
    "m_matrix",
    "m_large_b",
    "rotated_frame_evolution",
]


class DegenerateNError(ValueError):
    """Stage count at which the closed-loop polygon degenerates."""


def rho_beta(N: int, cos_theta: float) -> tuple[float, float]:
    """Survival amplitude rho_N and accumulated phase beta_N of a closed
    N-stage loop on the cone with axis cosine ``cos_theta``.

        rho_N  = (cos^2(pi/N) + cos_theta^2 sin^2(pi/N))^(N/2)
        beta_N = pi - N arctan(cos_theta tan(pi/N))

    N = 2 hits the tan(pi/2) singularity (a two-vertex loop has no
    nondegenerate polygon) and is rejected.
    """
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError("N must be a positive integer")
    if N == 2:
        raise DegenerateNError("N = 2 is degenerate (tan(pi/2) singularity)")
    if not -1.0 <= cos_theta <= 1.0:
        raise ValueError("cos_theta must lie in [-1, 1]")
    x = math.pi / N
    rho = (math.cos(x) ** 2 + (cos_theta * math.sin(x)) ** 2) ** (N / 2.0)
    beta = math.pi - N * math.atan(cos_theta * math.tan(x))
    return rho, beta


def continuum_phase(a: float, n) -> tuple[complex, np.ndarray]:
    """Scalar factor exp(i a n_z) and reference state rot(a, n) @ UP of the
    infinitely dense guided evolution through half-angle a.

    For a = pi the pair collapses to exp(-i pi (1 - n_z)) times the start
    state, i.e. half the enclosed solid angle.
    """
    n = np.asarray(n, dtype=float)
    return complex(np.exp(1j * a * n[2])), rot(a, n) @ UP


def _dyn_bracket(a: float, n: np.ndarray, b: np.ndarray) -> float:
    """b_z sin2a/2a + (b.n) n_z (1 - sin2a/2a) + (b x n)_z (1 - cos2a)/2a,
    continued through a -> 0."""
    bz = float(b[2])
    bn = float(np.dot(b, n))
    cz = float(np.cross(b, n)[2])
    if abs(a) < 1e-9:
        return bz + cz * a
    s = math.sin(2.0 * a) / (2.0 * a)
    c = (1.0 - math.cos(2.0 * a)) / (2.0 * a)
    return bz * s + bn * float(n[2]) * (1.0 - s) + cz * c


def final_phase_with_H(a: float, n, b, mu_T: float) -> tuple[float, np.ndarray]:
    """Phase split of guided evolution in a static field mu sigma.b.

    Returns ``(dyn, geom_state)``: ``dyn`` is the accumulated field phase and
    ``geom_state = exp(i a n_z) rot(a, n) @ UP``; the predicted final state is
    ``exp(-1j * dyn) * geom_state``.  For a = pi and b parallel to n the pair
    reduces to exp(-i Omega/2) exp(-i mu_T n_z) on the start state.  No 2*pi
    reduction is ever applied to ``dyn``.
    """
    n = np.asarray(n, dtype=float)
    b = np.asarray(b, dtype=float)
    dyn = mu_T * _dyn_bracket(a, n, b)
    factor, state = continuum_phase(a, n)
    return float(dyn), factor * state


def dynamical_phase_quadrature(a: float, n, b, mu_T: float, steps: int = 2048) -> float:
    """Dynamical phase by composite Simpson quadrature along the guided path.

    Integrates the field expectation in the dragged state over the stage
    angle, i.e. (mu_T / a) * integral_0^a <v(t)|sigma.b|v(t)> dt with
    v(t) = rot(t, n) @ UP.  Numerical route independent of the closed bracket
    in ``final_phase_with_H``; error is O(steps^-4).
    """
    if steps < 16:
        raise ValueError("steps must be >= 16")
    n = np.asarray(n, dtype=float)
    b = np.asarray(b, dtype=float)
    if a == 0.0:
        return float(mu_T * b[2])
    m = steps + (steps % 2)  # Simpson needs an even interval count
    theta = np.linspace(0.0, a, m + 1)
    c, s = np.cos(theta), np.sin(theta)
    states = np.empty((theta.size, 2), dtype=complex)
    states[:, 0] = c - 1j * n[2] * s
    states[:, 1] = -1j * (n[0] + 1j * n[1]) * s
    field = pauli_dot(b)
    integrand = np.real(np.einsum("ij,jk,ik->i", states.conj(), field, states))
    return float(mu_T / a * simpson(integrand, x=theta))


def m_matrix(a: float, n, b_ratio: float) -> np.ndarray:
    """Exact end-to-end operator of the continuously absorbing polarizer at
    absorption-to-rotation ratio ``b_ratio``, in the corotating frame.

    With Delta^2 = b^2 + 2 i b n_z - 1 the entries combine
    e^{-ab} cosh(a Delta) and e^{-ab} sinh(a Delta)/Delta, both even in Delta,
    so the complex square-root branch never matters.  The exponentials are
    assembled as exp(a(+/-Delta - b)) so large a*b cannot overflow; below
    |a Delta| = 1e-6 the sinh quotient switches to a 3-term series.

    Equals mat_exp(i a M) with M = [[n_z, n_-], [n_+, -n_z + 2ib]].
    """
    if not b_ratio >= 0.0:
        raise ValueError("b_ratio must be >= 0")
    n = np.asarray(n, dtype=float)
    nz = float(n[2])
    b = float(b_ratio)
    delta_sq = complex(b * b - 1.0, 2.0 * b * nz)
    delta = np.sqrt(delta_sq)
    a_delta = a * delta
    if abs(a_delta) < 1e-6:
        y = a_delta * a_delta
        eab = math.exp(-a * b)
        ch = eab * (1.0 + y / 2.0 + y * y / 24.0)
        shq = eab * a * (1.0 + y / 6.0 + y * y / 120.0)
    else:
        ep = np.exp(a * (delta - b))
        em = np.exp(-a * (delta + b))
        ch = 0.5 * (ep + em)  # e^{-ab} cosh(a Delta)
        shq = 0.5 * (ep - em) / delta  # e^{-ab} sinh(a Delta)/Delta
    w = (b + 1j * nz) * shq
    n_plus = n[0] + 1j * n[1]
    n_minus = n[0] - 1j * n[1]
    return np.array(
        [[ch + w, 1j * n_minus * shq], [1j * n_plus * shq, ch - w]],
        dtype=complex,
    )


def m_large_b(a: float, n, b_ratio: float) -> np.ndarray:
    """Leading strong-absorption form of ``m_matrix``.

    exp(i a n_z) [[1 + a(n_z^2 - 1)/(2b), i n_-/(2b)], [i n_+/(2b), 0]];
    the residual against the exact operator is O(1/b^2).
    """
    if not b_ratio > 0.0:
        raise ValueError("b_ratio must be > 0")
    n = np.asarray(n, dtype=float)
    nz = float(n[2])
    b = float(b_ratio)
    n_plus = n[0] + 1j * n[1]
    n_minus = n[0] - 1j * n[1]
    pref = np.exp(1j * a * nz)
    return pref * np.array(
        [
            [1.0 + a * (nz * nz - 1.0) / (2.0 * b), 1j * n_minus / (2.0 * b)],
            [1j * n_plus / (2.0 * b), 0.0],
        ],
        dtype=complex,
    )


def rotated_frame_evolution(a: float, n, b_ratio: float, t_fraction: float) -> np.ndarray:
    """Lab-frame propagator of the continuous absorber model at fractional
    time ``t_fraction``.

    In the frame corotating with the guiding axis the generator is constant,
    so the propagator is rot(a f, n) @ mat_exp(i a f M) with
    M = [[n_z, n_-], [n_+, -n_z + 2ib]].  At t_fraction = 1 this equals
    rot(a, n) @ m_matrix(a, n, b_ratio); at t_fraction = 0 it is the identity,
    and for b_ratio = 0 the full-time propagator is the identity as well (the
    frame rotation is exactly undone).
    """
    if not 0.0 <= t_fraction <= 1.0:
        raise ValueError("t_fraction must lie in [0, 1]")
    if not b_ratio >= 0.0:
        raise ValueError("b_ratio must be >= 0")
    n = np.asarray(n, dtype=float)
    n_plus = n[0] + 1j * n[1]
    n_minus = n[0] - 1j * n[1]
    m = np.array(
        [[n[2], n_minus], [n_plus, -n[2] + 2j * b_ratio]],
        dtype=complex,
    )
    f = float(t_fraction)
    return rot(a * f, n) @ mat_exp(1j * a * f * m)
