"""Measurement-guided spin-1/2 evolution.

A small numpy library that drives a two-level system along a chosen path by
dense sequences of projections, with or without a static field, computes the
resulting geometric and dynamical phases, and checks the brute-force operator
products against exact closed forms, including a leaky-polarizer model of
realistic projection stages.
"""

from .closed_forms import (
    DegenerateNError,
    continuum_phase,
    dynamical_phase_quadrature,
    final_phase_with_H,
    m_large_b,
    m_matrix,
    rho_beta,
    rotated_frame_evolution,
)
from .constants import HBAR, JOULE_PER_MEV
from .engine import (
    EvolutionResult,
    HamiltonianSpec,
    OrthogonalStepError,
    UnsupportedModeError,
    ZenoConfig,
    closed_loop_phase,
    evolve_ideal,
    evolve_imperfect,
    evolve_imperfect_first_order,
    evolve_with_hamiltonian,
    unwrap_phase,
)
from .geometry import (
    NonCyclicError,
    PhaseTable,
    PolygonSpec,
    phase_table,
    solid_angle_isosceles,
    solid_angle_polygon,
    solid_angle_regular,
)
from .physical import (
    PhysicalSetup,
    RatesReport,
    bias_field_phase,
    epsilon_report,
    per_step_epsilon,
    rates_report,
)
from .projections import (
    PolarizerModel,
    ProjectionFamily,
    epsilon_from_strength,
    imperfect,
    phi,
    phi_perp,
    projector,
    projector_perp,
    sqrt_imperfect,
)
from .su2 import (
    DOWN,
    IDENTITY,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    UP,
    conjugate_axis,
    is_hermitian,
    is_projector,
    is_unit,
    is_unitary,
    mat_exp,
    norm2,
    pauli_dot,
    rot,
    unit_vector,
)

__version__ = "0.1.0"

__all__ = [
    "HBAR",
    "JOULE_PER_MEV",
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
    "ProjectionFamily",
    "PolarizerModel",
    "phi",
    "phi_perp",
    "projector",
    "projector_perp",
    "imperfect",
    "sqrt_imperfect",
    "epsilon_from_strength",
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
    "DegenerateNError",
    "rho_beta",
    "continuum_phase",
    "final_phase_with_H",
    "dynamical_phase_quadrature",
    "m_matrix",
    "m_large_b",
    "rotated_frame_evolution",
    "NonCyclicError",
    "PolygonSpec",
    "PhaseTable",
    "solid_angle_isosceles",
    "solid_angle_regular",
    "solid_angle_polygon",
    "phase_table",
    "PhysicalSetup",
    "RatesReport",
    "rates_report",
    "epsilon_report",
    "per_step_epsilon",
    "bias_field_phase",
    "__version__",
]
