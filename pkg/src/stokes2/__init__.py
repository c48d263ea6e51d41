"""Oscillating plate in a rarefied gas: analytical solution of the BGK
half-space problem by Riemann-Hilbert factorization, with an independent
discrete-ordinates reference solver."""

from .dispersion import Freq, lam, lambda0, laurent_tail, s_func
from .exceptions import (
    BranchTrackingError,
    ConvergenceError,
    DegenerateInputError,
    NearCriticalError,
    NoDiscreteZeroError,
    Stokes2Error,
)
from .factor import Factorizer
from .oracle import OracleConfig, landau_profile, solve_kinetic_bvp
from .solution import (
    ForceResponse,
    Profile,
    WallResponse,
    coeff_a,
    coeff_a0,
    dissipation,
    eigenfunction_moments,
    friction,
    h_distribution,
    velocity_profile,
    verify_wall_bc,
    wall_velocity,
)
from .spectrum import (
    SpectrumInfo,
    classify,
    critical_frequency,
    find_eta0,
    index_transition_frequency,
    mu0,
)

__version__ = "0.1.0"

__all__ = [
    "Factorizer",
    "OracleConfig",
    "landau_profile",
    "solve_kinetic_bvp",
    "BranchTrackingError",
    "ConvergenceError",
    "DegenerateInputError",
    "ForceResponse",
    "Freq",
    "NearCriticalError",
    "NoDiscreteZeroError",
    "Profile",
    "SpectrumInfo",
    "Stokes2Error",
    "WallResponse",
    "classify",
    "coeff_a",
    "coeff_a0",
    "critical_frequency",
    "dissipation",
    "eigenfunction_moments",
    "find_eta0",
    "friction",
    "h_distribution",
    "index_transition_frequency",
    "lam",
    "lambda0",
    "laurent_tail",
    "mu0",
    "s_func",
    "velocity_profile",
    "verify_wall_bc",
    "wall_velocity",
]
