"""Exact 2x2 complex algebra for spin-1/2: Pauli vectors, axis rotations and
a closed-form matrix exponential.

All functions are pure and work on plain numpy values: spinors are complex
arrays of shape (2,), operators are complex (2, 2) arrays, axes are real unit
3-vectors.  ``rot`` fixes the sign convention exp(-i theta sigma.n) for the
whole package; every other module builds rotations through it so the
convention cannot drift.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "IDENTITY",
    "UP",
    "DOWN",
    "unit_vector",
    "pauli_dot",
    "rot",
    "conjugate_axis",
    "mat_exp",
    "is_hermitian",
    "is_unitary",
    "is_projector",
    "norm2",
    "is_unit",
]

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)

UP = np.array([1.0, 0.0], dtype=complex)  # spin up along z
DOWN = np.array([0.0, 1.0], dtype=complex)  # spin down along z


def unit_vector(x, y, z) -> np.ndarray:
    """Unit 3-vector from components; normalizes, rejects zero or non-finite."""
    v = np.array([x, y, z], dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError("axis components must be finite")
    r = float(np.linalg.norm(v))
    if r < 1e-150:
        raise ValueError("cannot orient the zero vector")
    return v / r


def pauli_dot(v) -> np.ndarray:
    """sigma . v for a real 3-vector v.

    Hermitian and traceless; for a unit vector it squares to the identity.
    """
    vx, vy, vz = np.asarray(v, dtype=float)
    return np.array(
        [[vz, vx - 1j * vy], [vx + 1j * vy, -vz]],
        dtype=complex,
    )


def rot(theta: float, n) -> np.ndarray:
    """Spin rotation exp(-i theta sigma.n) = cos(theta) I - i sin(theta) sigma.n."""
    return np.cos(theta) * IDENTITY - 1j * np.sin(theta) * pauli_dot(n)


def conjugate_axis(b, theta: float, n) -> np.ndarray:
    """The axis b rotated by 2*theta about n.

    Closed form of the conjugation rot(-theta, n) (sigma.b) rot(theta, n)
    = sigma.result; the matrix identity is what the test suite checks, the
    vector formula is its evaluation.  Preserves |b| and b.n.
    """
    b = np.asarray(b, dtype=float)
    n = np.asarray(n, dtype=float)
    c, s = np.cos(2.0 * theta), np.sin(2.0 * theta)
    return b * c + n * float(np.dot(b, n)) * (1.0 - c) + np.cross(b, n) * s


def mat_exp(m) -> np.ndarray:
    """Matrix exponential of a 2x2 complex matrix, in closed form.

    Splits m into (tr m / 2) I + A with A traceless.  Then A^2 = delta^2 I,
    delta being the half-difference of the eigenvalues, and

        exp(m) = e^{tr m / 2} (cosh(delta) I + sinh(delta)/delta * A).

    cosh and sinh(delta)/delta are even in delta, so the square-root branch is
    irrelevant; below |delta| = 1e-8 the quotient switches to a 3-term Taylor
    series to avoid 0/0 at degenerate eigenvalues.
    """
    m = np.asarray(m, dtype=complex)
    s = 0.5 * (m[0, 0] + m[1, 1])
    a = m - s * IDENTITY
    delta_sq = a[0, 0] * a[0, 0] + a[0, 1] * a[1, 0]  # = -det(a)
    delta = np.sqrt(delta_sq)
    if abs(delta) < 1e-8:
        ch = 1.0 + delta_sq / 2.0 + delta_sq * delta_sq / 24.0
        shq = 1.0 + delta_sq / 6.0 + delta_sq * delta_sq / 120.0
    else:
        ch = np.cosh(delta)
        shq = np.sinh(delta) / delta
    return np.exp(s) * (ch * IDENTITY + shq * a)


def _maxabs(m) -> float:
    return float(np.max(np.abs(m)))


def is_hermitian(m, tol: float = 1e-12) -> bool:
    m = np.asarray(m, dtype=complex)
    return _maxabs(m - m.conj().T) <= tol


def is_unitary(m, tol: float = 1e-12) -> bool:
    m = np.asarray(m, dtype=complex)
    return _maxabs(m.conj().T @ m - IDENTITY) <= tol


def is_projector(m, tol: float = 1e-12) -> bool:
    m = np.asarray(m, dtype=complex)
    return is_hermitian(m, tol) and _maxabs(m @ m - m) <= tol


def norm2(psi) -> float:
    """Squared norm |up|^2 + |down|^2 of a spinor."""
    psi = np.asarray(psi, dtype=complex)
    return float(np.real(np.vdot(psi, psi)))


def is_unit(psi, tol: float = 1e-12) -> bool:
    return abs(norm2(psi) - 1.0) <= tol
