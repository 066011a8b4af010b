"""Coin rotations acting on the two internal states.

The coin is a 2x2 unitary parametrized by a rotation angle ``alpha`` and a
phase ``chi``:

    [[ cos(alpha/2),            e^{-i chi} sin(alpha/2) ],
     [ -e^{i chi} sin(alpha/2), cos(alpha/2)            ]]

A pi/2 pulse with chi = -pi/2 splits |1> into (|1> + i|2>)/sqrt(2); the
first toss of the standard walk uses chi = pi (Hadamard-like). Hermitian
conjugation is chi -> chi + pi at fixed alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import SpinorState


@dataclass(frozen=True)
class CoinParams:
    alpha: float
    chi: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.chi)):
            raise ValueError(f"coin angles must be finite, got {self}")


# Standard-walk pulses: a Hadamard-like first toss, then equal-superposition
# tosses with a fixed -pi/2 phase.
FIRST_COIN = CoinParams(np.pi / 2, np.pi)
STEP_COIN = CoinParams(np.pi / 2, -np.pi / 2)

# pi pulses that swap the internal states; conjugating the shift with this
# pair inverts the shift direction.
REFLECTION_COIN = CoinParams(np.pi, -np.pi / 2)
UNREFLECTION_COIN = CoinParams(np.pi, np.pi / 2)


def coin_matrix(params: CoinParams) -> np.ndarray:
    """2x2 unitary (det = 1) for the given rotation angle and phase."""
    c = math.cos(params.alpha / 2.0)
    s = math.sin(params.alpha / 2.0)
    phase = np.exp(-1j * params.chi)
    return np.array([[c, phase * s], [-np.conj(phase) * s, c]],
                    dtype=np.complex128)


def conjugate_params(params: CoinParams) -> CoinParams:
    """Parameters of the Hermitian conjugate coin: chi -> chi + pi."""
    return CoinParams(params.alpha, params.chi + math.pi)


def biased_params(weight: float, chi: float = STEP_COIN.chi) -> CoinParams:
    """Coin sending |1> to sqrt(weight)|1> + phase*sqrt(1-weight)|2>."""
    if not 0.0 <= weight <= 1.0:
        raise ValueError(f"population weight must lie in [0, 1], got {weight}")
    return CoinParams(2.0 * math.acos(math.sqrt(weight)), chi)


def apply_coin(state: SpinorState, params: CoinParams) -> SpinorState:
    """Rotate the internal states uniformly over the whole lattice."""
    m = coin_matrix(params)
    return state.with_amplitudes(state.amplitudes @ m.T)
