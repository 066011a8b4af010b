"""Independent reference implementations for cross-validation.

Everything here deliberately avoids the production code paths: the walk
is propagated on a position grid with FFTs instead of Bessel
convolutions, Bessel values come from an integral representation instead
of the backward recurrence, and the decoherent limit is checked against
an exact binomial. Slow is fine; shared code would defeat the purpose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .coin import CoinParams
from .errors import DomainError, ResolutionError
from .protocols import IDEAL, WalkConfig, WalkTrajectory, resolve_step_coins
from .states import MomentumLattice, SpinorState

DEFAULT_GRID_SIZE = 1024

QUADRATURE_MAX_ORDER = 60
QUADRATURE_MAX_ARGUMENT = 50.0

# Norm allowed outside the walk lattice when reading grid content back.
GRID_LEAK_TOL = 1e-12


def bessel_quadrature(m: int, x: float, n_points: int = 4096) -> float:
    """J_m(x) from (1/pi) * integral_0^pi cos(m*t - x*sin t) dt.

    Evaluated with the periodic trapezoid rule over a full period, which
    is spectrally accurate here: the integrand's Fourier modes above the
    grid size are vanishingly small for the validated (m, x) domain.
    """
    if abs(m) > QUADRATURE_MAX_ORDER:
        raise DomainError(
            f"|m| = {abs(m)} exceeds quadrature domain |m| <= {QUADRATURE_MAX_ORDER}"
        )
    if not math.isfinite(x) or abs(x) > QUADRATURE_MAX_ARGUMENT:
        raise DomainError(
            f"|x| = {abs(x)} exceeds quadrature domain |x| <= {QUADRATURE_MAX_ARGUMENT}"
        )
    theta = 2.0 * math.pi * np.arange(n_points) / n_points
    return float(np.mean(np.cos(m * theta - x * np.sin(theta))))


@dataclass(frozen=True)
class ClassicalWalkSpec:
    """Random walk of j independent steps of size q, right with prob p_right."""

    steps: int
    p_right: float = 0.5
    q: int = 1

    def __post_init__(self):
        if self.steps < 0:
            raise ValueError(f"steps must be nonnegative, got {self.steps}")
        if not 0.0 <= self.p_right <= 1.0:
            raise ValueError(f"p_right must lie in [0, 1], got {self.p_right}")
        if self.q < 1:
            raise ValueError(f"q must be positive, got {self.q}")


def classical_walk_distribution(spec: ClassicalWalkSpec,
                                origin: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Exact binomial endpoint distribution, as (positions, probabilities)."""
    j, p, q = spec.steps, spec.p_right, spec.q
    rights = np.arange(j + 1)
    positions = origin + (2 * rights - j) * q
    probs = np.array(
        [math.comb(j, int(r)) * p ** int(r) * (1.0 - p) ** int(j - r)
         for r in rights]
    )
    return positions, probs


def classical_mixture_on_lattice(spec: ClassicalWalkSpec,
                                 lattice: MomentumLattice,
                                 origins: Sequence[tuple[int, float]] = ((0, 0.5), (1, 0.5)),
                                 ) -> np.ndarray:
    """Weighted binomial mixture embedded on a lattice (for TV comparisons)."""
    out = np.zeros(lattice.size)
    for origin, weight in origins:
        positions, probs = classical_walk_distribution(spec, origin)
        for n, p in zip(positions, probs):
            out[lattice.index(int(n))] += weight * p
    return out


class PositionGrid:
    """Spinor wavefunction sampled on M uniform angle points over [0, 2pi).

    The grid's momentum content lives on integers in [-M/2, M/2); the
    stored values are physically normalized so that
    sum_i |psi_s(theta_i)|^2 * (2pi/M) = 1 summed over spins.
    """

    def __init__(self, values: np.ndarray, beta: float = 0.0):
        values = np.asarray(values, dtype=np.complex128)
        if values.ndim != 2 or values.shape[1] != 2:
            raise ValueError(f"grid values must have shape (M, 2), got {values.shape}")
        self.values = values
        self.beta = float(beta)

    @property
    def n_points(self) -> int:
        return self.values.shape[0]

    def thetas(self) -> np.ndarray:
        return 2.0 * math.pi * np.arange(self.n_points) / self.n_points

    def grid_momenta(self) -> np.ndarray:
        """Integer momentum labels in FFT order."""
        m = self.n_points
        return np.where(np.arange(m) < m // 2, np.arange(m), np.arange(m) - m)

    def norm(self) -> float:
        dtheta = 2.0 * math.pi / self.n_points
        return float(np.sum(np.abs(self.values) ** 2) * dtheta)

    @classmethod
    def from_state(cls, state: SpinorState,
                   n_points: int = DEFAULT_GRID_SIZE) -> "PositionGrid":
        """psi_s(theta) = sum_n c_{n,s} e^{i n theta} / sqrt(2pi)."""
        if n_points < 4 * state.lattice.size:
            raise ResolutionError(
                f"grid of {n_points} points cannot oversample a lattice of "
                f"{state.lattice.size} sites (need >= 4x)"
            )
        coeffs = np.zeros((n_points, 2), dtype=np.complex128)
        for i, n in enumerate(state.momenta()):
            coeffs[n % n_points] = state.amplitudes[i]
        values = n_points * np.fft.ifft(coeffs, axis=0) / math.sqrt(2.0 * math.pi)
        return cls(values, state.beta)

    def momentum_coefficients(self) -> np.ndarray:
        """c_{n,s} in FFT momentum order (inverse of from_state)."""
        return np.fft.fft(self.values, axis=0) * math.sqrt(2.0 * math.pi) / self.n_points

    def to_state(self, lattice: MomentumLattice,
                 leak_tol: float = GRID_LEAK_TOL) -> SpinorState:
        """Project onto a momentum lattice, erroring on off-lattice content."""
        coeffs = self.momentum_coefficients()
        grid_n = self.grid_momenta()
        amps = np.zeros((lattice.size, 2), dtype=np.complex128)
        inside = np.zeros(self.n_points, dtype=bool)
        for i, n in enumerate(grid_n):
            if lattice.n_min <= n <= lattice.n_max:
                amps[lattice.index(int(n))] = coeffs[i]
                inside[i] = True
        outside_norm = float(np.sum(np.abs(coeffs[~inside]) ** 2))
        if outside_norm > leak_tol:
            raise ResolutionError(
                f"norm {outside_norm:.3e} sits outside the target lattice "
                f"(tolerance {leak_tol:.1e}); the grid content has outgrown it"
            )
        return SpinorState(lattice, amps, self.beta, _skip_checks=True)


def _coin_on_grid(grid: PositionGrid, params: CoinParams) -> None:
    c = math.cos(params.alpha / 2.0)
    s = math.sin(params.alpha / 2.0)
    phase = np.exp(-1j * params.chi)
    matrix = np.array([[c, phase * s], [-np.conj(phase) * s, c]])
    grid.values = grid.values @ matrix.T


def _shift_on_grid(grid: PositionGrid, config: WalkConfig) -> None:
    theta = grid.thetas()
    if config.shift_mode == IDEAL:
        grid.values[:, 0] *= np.exp(1j * config.q * theta)
        grid.values[:, 1] *= np.exp(-1j * config.q * theta)
        return
    grid.values[:, 0] *= np.exp(-1j * config.kick.k1 * np.cos(theta))
    grid.values[:, 1] *= np.exp(-1j * config.kick.k2 * np.cos(theta))
    coeffs = np.fft.fft(grid.values, axis=0)
    phases = np.exp(-0.5j * config.kick.tau * (grid.grid_momenta() + grid.beta) ** 2)
    grid.values = np.fft.ifft(coeffs * phases[:, None], axis=0)


def propagate_position_grid(initial: SpinorState, config: WalkConfig,
                            grid_size: int = DEFAULT_GRID_SIZE,
                            coins: Optional[Sequence[CoinParams]] = None,
                            ) -> WalkTrajectory:
    """Run the walk protocol entirely on the position grid.

    Kicks are pointwise phase masks in theta, free evolution a phase mask
    in the conjugate basis; each recorded step is mapped back onto the
    initial state's lattice. Coin draws replicate run_walk's stream, so
    noisy runs are directly comparable.
    """
    lattice = initial.lattice
    if coins is None:
        coins = resolve_step_coins(config)
    grid = PositionGrid.from_state(initial, grid_size)
    states = [grid.to_state(lattice)]
    dists = [states[0].probabilities()]
    for coin in coins:
        _coin_on_grid(grid, coin)
        _shift_on_grid(grid, config)
        state = grid.to_state(lattice)
        states.append(state)
        dists.append(state.probabilities())
    return WalkTrajectory(lattice, initial.beta, np.array(dists), config, states)
