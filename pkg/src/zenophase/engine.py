"""Brute-force, time-ordered stage products for guided spin-1/2 evolution.

The three ``evolve_*`` functions build the actual operator product stage by
stage (earlier stages rightmost) and report the final spinor together with
the survival probability and unwrapped phases.  They are the numerical side
of every closed-form check in ``zenophase.closed_forms``.

Phase conventions: a state that acquires exp(-i beta) relative to a reference
has phase ``beta``.  ``total_phase`` is taken relative to the final guiding
state and is accumulated stage by stage, never read off a single terminal
overlap, so it carries no mod-2pi ambiguity.  For a closed loop (a = pi) the
result also carries ``beta_closed``, the loop phase relative to the start
state; ``closed_loop_phase`` provides the independent terminal-overlap route
for cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .projections import PolarizerModel, ProjectionFamily
from .su2 import IDENTITY, UP, norm2, pauli_dot, rot, unit_vector

__all__ = [
    "HamiltonianSpec",
    "ZenoConfig",
    "EvolutionResult",
    "OrthogonalStepError",
    "UnsupportedModeError",
    "evolve_ideal",
    "evolve_with_hamiltonian",
    "evolve_imperfect",
    "evolve_imperfect_first_order",
    "unwrap_phase",
    "closed_loop_phase",
]

TWO_PI = 2.0 * math.pi
_CLOSED_TOL = 1e-12


class OrthogonalStepError(ValueError):
    """Consecutive states are orthogonal; their relative phase is undefined."""


class UnsupportedModeError(ValueError):
    """Configuration combines features with no supported evolution route."""


@dataclass(frozen=True)
class HamiltonianSpec:
    """Static field term mu sigma.b; only the product mu_T = mu*T enters."""

    mu_T: float
    b_axis: np.ndarray

    def __post_init__(self):
        if not math.isfinite(self.mu_T):
            raise ValueError("mu_T must be finite")
        bx, by, bz = np.asarray(self.b_axis, dtype=float)
        object.__setattr__(self, "b_axis", unit_vector(bx, by, bz))


@dataclass(frozen=True)
class ZenoConfig:
    """Full experiment description: guiding family plus optional field or
    leaky polarizer (not both; that combination has no reference solution)."""

    fam: ProjectionFamily
    hamiltonian: HamiltonianSpec | None = None
    polarizer: PolarizerModel | None = None

    def __post_init__(self):
        if self.hamiltonian is not None and self.polarizer is not None:
            raise UnsupportedModeError(
                "field and leaky polarizer together are not supported"
            )


@dataclass(frozen=True)
class EvolutionResult:
    """Final spinor plus derived scalars.

    ``survival_prob`` is the squared norm of ``final``.  ``total_phase`` is
    the stagewise phase relative to the final guiding state; ``beta_closed``
    (set when a = pi) is the loop phase relative to the start state.
    ``trajectory`` holds the post-stage states when recording was requested.
    """

    final: np.ndarray
    survival_prob: float
    total_phase: float
    beta_closed: float | None = None
    trajectory: np.ndarray | None = None


def _family_states(n: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    # rot(theta, n) @ UP, vectorized over theta
    c, s = np.cos(thetas), np.sin(thetas)
    out = np.empty((thetas.size, 2), dtype=complex)
    out[:, 0] = c - 1j * n[2] * s
    out[:, 1] = -1j * (n[0] + 1j * n[1]) * s
    return out


def _is_closed(a: float) -> bool:
    return abs(a - math.pi) <= _CLOSED_TOL


def _chain_result(
    fam: ProjectionFamily, step_unitary: np.ndarray | None, record: bool
) -> EvolutionResult:
    """Ordered product over stages: (optional unitary, then projection) per
    stage, k = 1 applied first.  The running state is stored as the current
    guiding state times a complex amplitude, which is exact for rank-1
    projections."""
    thetas = fam.a * np.arange(fam.N + 1) / fam.N
    phis = _family_states(fam.n, thetas)
    prev = phis[:-1] if step_unitary is None else phis[:-1] @ step_unitary.T
    z = np.einsum("ij,ij->i", phis[1:].conj(), prev)
    mags = np.abs(z)
    if np.any(mags == 0.0):
        k = int(np.argmin(mags))
        raise OrthogonalStepError(f"stage {k + 1} projects the state to zero")
    phase_sum = float(np.angle(z).sum())
    log_rho = float(np.log(mags).sum())
    survival = math.exp(2.0 * log_rho)
    amp = math.exp(log_rho) * complex(math.cos(phase_sum), math.sin(phase_sum))
    final = amp * phis[-1]
    beta = math.pi - phase_sum if _is_closed(fam.a) else None
    traj = None
    if record:
        amps = np.cumprod(z)
        traj = np.concatenate([phis[:1], amps[:, None] * phis[1:]], axis=0)
    return EvolutionResult(final, survival, -phase_sum, beta, traj)


def evolve_ideal(cfg: ZenoConfig, record_trajectory: bool = False) -> EvolutionResult:
    """Pure measurement drive: the ordered product of the stage projectors
    applied to the start state."""
    if cfg.hamiltonian is not None or cfg.polarizer is not None:
        raise UnsupportedModeError("evolve_ideal expects projections only")
    return _chain_result(cfg.fam, None, record_trajectory)


def evolve_with_hamiltonian(
    cfg: ZenoConfig, record_trajectory: bool = False
) -> EvolutionResult:
    """Stage projections interleaved with free precession exp(-i mu dT sigma.b).

    With mu_T = 0 this is arithmetic-for-arithmetic identical to
    ``evolve_ideal``.
    """
    if cfg.hamiltonian is None:
        raise UnsupportedModeError("evolve_with_hamiltonian needs a field term")
    if cfg.polarizer is not None:
        raise UnsupportedModeError("field plus leaky polarizer is not supported")
    h = cfg.hamiltonian
    u = rot(h.mu_T / cfg.fam.N, h.b_axis)
    return _chain_result(cfg.fam, u, record_trajectory)


def _imperfect_result(
    fam: ProjectionFamily, final: np.ndarray, traj: np.ndarray | None
) -> EvolutionResult:
    survival = norm2(final)
    ref = rot(fam.a, fam.n) @ UP  # final guiding state
    ovl = complex(np.vdot(ref, final))
    total = -float(np.angle(ovl)) if ovl != 0 else 0.0
    beta = None
    if _is_closed(fam.a) and ovl != 0:
        start = complex(np.vdot(UP, final))
        if start != 0:
            beta = float((-np.angle(start)) % TWO_PI)
    return EvolutionResult(final, survival, total, beta, traj)


def evolve_imperfect(cfg: ZenoConfig, record_trajectory: bool = False) -> EvolutionResult:
    """Leaky-polarizer drive, exact per-stage product.

    The plain product of the N leaky projectors factors exactly into a final
    frame rotation, one square-root leak, and the N-th power of the symmetric
    sandwich sqrt(P'_0) rot(-a/N, n) sqrt(P'_0); the fast path exponentiates
    that constant sandwich.  With trajectory recording on, the lab-frame
    product is carried out stage by stage instead and the post-stage states
    are kept (memory scales with N).
    """
    if cfg.polarizer is None:
        raise UnsupportedModeError("evolve_imperfect needs a polarizer model")
    if cfg.hamiltonian is not None:
        raise UnsupportedModeError("field plus leaky polarizer is not supported")
    fam = cfg.fam
    eps = cfg.polarizer.epsilon
    if record_trajectory:
        d = np.diag([1.0 + 0.0j, eps + 0.0j])
        traj = np.empty((fam.N + 1, 2), dtype=complex)
        v = UP.astype(complex)
        traj[0] = v
        for k in range(1, fam.N + 1):
            r = rot(fam.theta(k), fam.n)
            v = r @ d @ r.conj().T @ v
            traj[k] = v
        return _imperfect_result(fam, v, traj)
    sq = np.diag([1.0 + 0.0j, math.sqrt(eps) + 0.0j])
    g = sq @ rot(-fam.a / fam.N, fam.n) @ sq
    w = np.linalg.matrix_power(g, fam.N) @ UP
    final = rot(fam.a, fam.n) @ (sq @ w)
    return _imperfect_result(fam, final, None)


def evolve_imperfect_first_order(cfg: ZenoConfig) -> EvolutionResult:
    """Leaky-polarizer drive with the first-order stage matrix.

    Cross-check variant: the stage keeps only the linear rotation term inside
    the leaky sandwich, differing from the exact stage by O(1/N^2) per stage;
    both converge to the same continuum operator.
    """
    if cfg.polarizer is None:
        raise UnsupportedModeError("evolve_imperfect_first_order needs a polarizer model")
    if cfg.hamiltonian is not None:
        raise UnsupportedModeError("field plus leaky polarizer is not supported")
    fam = cfg.fam
    eps = cfg.polarizer.epsilon
    sq = np.diag([1.0 + 0.0j, math.sqrt(eps) + 0.0j])
    step = sq @ (IDENTITY + 1j * (fam.a / fam.N) * pauli_dot(fam.n)) @ sq
    w = np.linalg.matrix_power(step, fam.N) @ UP
    final = rot(fam.a, fam.n) @ (sq @ w)
    return _imperfect_result(fam, final, None)


def unwrap_phase(states) -> float:
    """Stagewise relative phase of a chain of spinors in the exp(-i beta)
    convention: beta = sum_k arg<psi_{k+1}|psi_k>, each term in (-pi, pi].

    Raises ``OrthogonalStepError`` on a vanishing consecutive overlap.  Note
    that consecutive post-projection states are mutually in phase, so for a
    pure projection chain the sum is carried by deliberate phase steps; to
    expose the loop phase of a closed trajectory, append the start state.
    """
    arr = np.asarray(states, dtype=complex)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("states must be a sequence of 2-component spinors")
    if arr.shape[0] < 2:
        return 0.0
    ov = np.einsum("ij,ij->i", arr[1:].conj(), arr[:-1])  # <psi_{k+1}|psi_k>
    scale = np.linalg.norm(arr, axis=1)
    bad = np.abs(ov) <= 1e-14 * scale[1:] * scale[:-1]
    if np.any(bad):
        raise OrthogonalStepError(f"zero overlap at step {int(np.argmax(bad))}")
    return float(np.angle(ov).sum())


def closed_loop_phase(final, start=UP) -> float:
    """Loop phase -arg<start|final>, folded into [0, 2 pi).

    Terminal-overlap route; the stagewise accumulation in the evolve results
    is the normative one, and for closed ideal loops the two must agree.
    """
    amp = complex(np.vdot(np.asarray(start, dtype=complex), np.asarray(final, dtype=complex)))
    if amp == 0:
        raise OrthogonalStepError("final state is orthogonal to the start state")
    return float((-np.angle(amp)) % TWO_PI)
