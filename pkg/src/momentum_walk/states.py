"""Momentum lattice and two-component spinor states.

The walk space is a truncated lattice of momentum eigenstates labelled by
an integer ``n`` (two-photon-recoil units). Each lattice site carries two
complex amplitudes, one per internal ("spin") state. The quasimomentum
``beta`` is the conserved fractional part of the momentum and is stored on
the state, not on the operators, so ensemble members with different
quasimomenta are independent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-6  # construction guard; operations preserve norm far better

SPIN_UP = 1    # internal state moving toward larger n under the shift
SPIN_DOWN = 2  # internal state moving toward smaller n


@dataclass(frozen=True)
class MomentumLattice:
    """Closed integer momentum window [n_min, n_max] containing 0."""

    n_min: int
    n_max: int

    def __post_init__(self):
        if not (self.n_min <= 0 <= self.n_max):
            raise ValueError(
                f"lattice must contain n=0: got [{self.n_min}, {self.n_max}]"
            )
        if self.size < 3:
            raise ValueError(f"lattice needs at least 3 sites, got {self.size}")

    @property
    def size(self) -> int:
        return self.n_max - self.n_min + 1

    def momenta(self) -> np.ndarray:
        """Integer momentum value of every site, in lattice order."""
        return np.arange(self.n_min, self.n_max + 1)

    def index(self, n: int) -> int:
        """Array index of momentum ``n``; raises if off the lattice."""
        if not self.n_min <= n <= self.n_max:
            raise ValueError(f"momentum {n} outside lattice [{self.n_min}, {self.n_max}]")
        return n - self.n_min


def symmetric_lattice(half_width: int) -> MomentumLattice:
    return MomentumLattice(-half_width, half_width)


class SpinorState:
    """Normalized spinor wavefunction over a momentum lattice.

    Amplitudes are stored as a complex array of shape ``(lattice.size, 2)``;
    column 0 is the internal state |1> and column 1 is |2>. Treat instances
    as immutable: every operation returns a new state.
    """

    __slots__ = ("lattice", "amplitudes", "beta")

    def __init__(self, lattice: MomentumLattice, amplitudes: np.ndarray,
                 beta: float = 0.0, *, _skip_checks: bool = False):
        amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        if not _skip_checks:
            if amplitudes.shape != (lattice.size, 2):
                raise ValueError(
                    f"amplitudes shape {amplitudes.shape} does not match "
                    f"lattice size {lattice.size} x 2 spins"
                )
            if not 0.0 <= beta < 1.0:
                raise ValueError(f"quasimomentum must lie in [0, 1), got {beta}")
            norm = np.sum(np.abs(amplitudes) ** 2)
            if abs(norm - 1.0) > NORM_TOL:
                raise ValueError(f"state not normalized: sum |c|^2 = {norm!r}")
            amplitudes = amplitudes.copy()
        self.lattice = lattice
        self.amplitudes = amplitudes
        self.beta = float(beta)

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))

    def copy(self) -> "SpinorState":
        return SpinorState(self.lattice, self.amplitudes.copy(), self.beta,
                           _skip_checks=True)

    def with_amplitudes(self, amplitudes: np.ndarray) -> "SpinorState":
        """New state on the same lattice/quasimomentum (no copy, no checks)."""
        return SpinorState(self.lattice, amplitudes, self.beta, _skip_checks=True)

    def momenta(self) -> np.ndarray:
        return self.lattice.momenta()

    def probabilities(self) -> np.ndarray:
        """Spin-resolved site populations, shape (size, 2)."""
        return np.abs(self.amplitudes) ** 2


def basis_state(lattice: MomentumLattice, n: int, spin: int = SPIN_UP,
                beta: float = 0.0) -> SpinorState:
    """Single momentum eigenstate |n> in the given internal state."""
    if spin not in (SPIN_UP, SPIN_DOWN):
        raise ValueError(f"spin must be 1 or 2, got {spin}")
    amps = np.zeros((lattice.size, 2), dtype=np.complex128)
    amps[lattice.index(n), spin - 1] = 1.0
    return SpinorState(lattice, amps, beta, _skip_checks=True)


def initial_ratchet_state(lattice: MomentumLattice, phi: float = np.pi / 2,
                          spin: int = SPIN_UP, beta: float = 0.0) -> SpinorState:
    """Broken-symmetry two-mode superposition (|n=0> + e^{i phi}|n=1>)/sqrt(2).

    This is the state whose mean momentum drifts by -k sin(phi)/2 per kick
    at quantum resonance, turning the kicked rotor into a directed ratchet.
    """
    if spin not in (SPIN_UP, SPIN_DOWN):
        raise ValueError(f"spin must be 1 or 2, got {spin}")
    if not (lattice.n_min <= 0 and lattice.n_max >= 1):
        raise ValueError(
            f"lattice [{lattice.n_min}, {lattice.n_max}] must contain n=0 and n=1"
        )
    if not 0.0 <= beta < 1.0:
        raise ValueError(f"quasimomentum must lie in [0, 1), got {beta}")
    amps = np.zeros((lattice.size, 2), dtype=np.complex128)
    amps[lattice.index(0), spin - 1] = 1.0 / np.sqrt(2.0)
    amps[lattice.index(1), spin - 1] = np.exp(1j * phi) / np.sqrt(2.0)
    return SpinorState(lattice, amps, beta, _skip_checks=True)
