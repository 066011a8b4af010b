"""Shared test utilities."""

import numpy as np

from momentum_walk import MomentumLattice, SpinorState


def random_state(lattice: MomentumLattice, rng: np.random.Generator,
                 beta: float = 0.0, margin: int = 0) -> SpinorState:
    """Haar-ish random normalized spinor, optionally zero near the edges."""
    amps = rng.normal(size=(lattice.size, 2)) + 1j * rng.normal(size=(lattice.size, 2))
    if margin:
        amps[:margin] = 0.0
        amps[-margin:] = 0.0
    amps /= np.linalg.norm(amps)
    return SpinorState(lattice, amps, beta)


def state_l2_distance(a: SpinorState, b: SpinorState) -> float:
    return float(np.linalg.norm(a.amplitudes - b.amplitudes))
