"""Discrete-time quantum walks in momentum space.

A two-level walker moves on a lattice of momentum eigenstates: microwave
coin pulses rotate the internal states and a spin-conditioned shift moves
them, either as an ideal translation or as a kicked-rotor ratchet at
quantum resonance. Protocol drivers add coin-phase decoherence, biased
walks, walk reversal, and Monte Carlo ensembles; an independent
position-grid propagator and quadrature Bessel oracle cross-check the
production operators.
"""

__version__ = "0.1.0"

from .analysis import (
    MomentStats,
    MomentumDistribution,
    ScalingFit,
    fidelity,
    moments,
    momentum_distribution,
    peak_center_ratio,
    scaling_exponent,
    state_moments,
)
from .bessel import bessel_j, bessel_j_sequence
from .coin import (
    FIRST_COIN,
    REFLECTION_COIN,
    STEP_COIN,
    UNREFLECTION_COIN,
    CoinParams,
    apply_coin,
    biased_params,
    coin_matrix,
    conjugate_params,
)
from .errors import (
    ConfigError,
    DomainError,
    ResolutionError,
    TruncationError,
    WalkError,
)
from .operators import (
    STANDARD_KICK,
    TALBOT_PERIOD,
    KickParams,
    PhysicalKickInputs,
    apply_free_evolution,
    apply_kick,
    ideal_shift,
    ideal_shift_dagger,
    kick_band_half_width,
    kick_strength_from_physical,
)
from .oracle import (
    ClassicalWalkSpec,
    PositionGrid,
    bessel_quadrature,
    classical_mixture_on_lattice,
    classical_walk_distribution,
    propagate_position_grid,
)
from .protocols import (
    BIASED_COIN_WEIGHT,
    BIASED_RATCHET_KICK,
    COMPOSED,
    DEFAULT_SEED,
    DIRECT,
    IDEAL,
    RATCHET,
    EnsembleSpec,
    EnsembleTrajectory,
    WalkConfig,
    WalkTrajectory,
    ensemble_rngs,
    run_biased_coin_walk,
    run_biased_ratchet_walk,
    run_ensemble,
    run_reversed_walk,
    run_walk,
    sample_noisy_coin,
    thermal_background,
    walk_lattice,
    walk_step,
)
from .states import (
    MomentumLattice,
    SpinorState,
    basis_state,
    initial_ratchet_state,
    symmetric_lattice,
)

__all__ = [
    "__version__",
    # states
    "MomentumLattice", "SpinorState", "basis_state", "initial_ratchet_state",
    "symmetric_lattice",
    # coin
    "CoinParams", "coin_matrix", "apply_coin", "conjugate_params",
    "biased_params", "FIRST_COIN", "STEP_COIN", "REFLECTION_COIN",
    "UNREFLECTION_COIN",
    # bessel / operators
    "bessel_j", "bessel_j_sequence", "KickParams", "PhysicalKickInputs",
    "STANDARD_KICK", "TALBOT_PERIOD", "apply_kick", "apply_free_evolution",
    "ideal_shift", "ideal_shift_dagger", "kick_band_half_width",
    "kick_strength_from_physical",
    # protocols
    "WalkConfig", "EnsembleSpec", "WalkTrajectory", "EnsembleTrajectory",
    "walk_step", "run_walk", "run_biased_coin_walk", "run_biased_ratchet_walk",
    "run_reversed_walk", "run_ensemble", "sample_noisy_coin",
    "thermal_background", "walk_lattice", "ensemble_rngs", "IDEAL", "RATCHET",
    "COMPOSED", "DIRECT", "DEFAULT_SEED", "BIASED_COIN_WEIGHT",
    "BIASED_RATCHET_KICK",
    # oracle
    "PositionGrid", "propagate_position_grid", "bessel_quadrature",
    "ClassicalWalkSpec", "classical_walk_distribution",
    "classical_mixture_on_lattice",
    # analysis
    "MomentumDistribution", "MomentStats", "ScalingFit",
    "momentum_distribution", "moments", "state_moments", "fidelity",
    "scaling_exponent", "peak_center_ratio",
    # errors
    "WalkError", "ConfigError", "DomainError", "TruncationError",
    "ResolutionError",
]
