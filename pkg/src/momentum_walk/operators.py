"""Single-step unitaries on the momentum lattice.

Conventions, fixed here and mirrored by the position-grid oracle: the
angle representation is <theta|n> ~ e^{i n theta}, so e^{i q theta}
raises momentum by q, and the kick e^{-i k cos(theta)} scatters momentum
as c'_{n,s} = sum_m (-i)^m J_m(k_s) c_{n+m,s}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import bessel_j_orders
from .errors import DomainError, TruncationError
from .states import SpinorState

TALBOT_PERIOD = 4.0 * math.pi  # pulse period at which free evolution resonates

# Amplitude below this counts a boundary slot as unoccupied for the shift.
OCCUPANCY_TOL = 1e-14

# Norm a single kick may lose to the lattice edges before it is an error.
KICK_LEAK_TOL = 1e-10

_I_POWERS = np.array([1.0 + 0.0j, -1.0j, -1.0 + 0.0j, 1.0j])  # (-i)^m cycle


@dataclass(frozen=True)
class KickParams:
    """Signed kick strengths per internal state and the pulse period."""

    k1: float
    k2: float
    tau: float = TALBOT_PERIOD

    def __post_init__(self):
        if not (math.isfinite(self.k1) and math.isfinite(self.k2)):
            raise ValueError(f"kick strengths must be finite, got {self}")
        if not (math.isfinite(self.tau) and self.tau > 0.0):
            raise ValueError(f"pulse period must be positive, got {self.tau}")

    @property
    def k_max(self) -> float:
        return max(abs(self.k1), abs(self.k2))


# The standard walk's ratchet pair: equal strength, opposite sign, so the
# two internal states undergo mirror-image directed transport.
STANDARD_KICK = KickParams(-1.45, 1.45)


@dataclass(frozen=True)
class PhysicalKickInputs:
    """Laboratory quantities determining one kick strength."""

    rabi_frequency: float
    pulse_length: float
    detuning: float

    def __post_init__(self):
        if self.detuning == 0.0:
            raise ValueError("detuning must be nonzero")


def kick_strength_from_physical(inputs: PhysicalKickInputs) -> float:
    """k = Omega^2 * tau_p / Delta; carries the sign of the detuning."""
    if inputs.detuning == 0.0:
        raise DomainError("detuning must be nonzero")
    return inputs.rabi_frequency ** 2 * inputs.pulse_length / inputs.detuning


def kick_band_half_width(k: float) -> int:
    """Half-width of the momentum band one kick can populate.

    J_m(k) decays super-exponentially for m >> |k|, so a fixed band of
    max(25, ceil(3|k|)) keeps the discarded tail below ~1e-25.
    """
    return max(25, math.ceil(3.0 * abs(k)))


def _kick_kernel(k: float) -> np.ndarray:
    """Convolution kernel v with c' = conv(c, v) restricted to the lattice."""
    band = kick_band_half_width(k)
    orders = np.arange(-band, band + 1)
    weights = _I_POWERS[np.mod(orders, 4)] * bessel_j_orders(orders, k)
    # c'_n = sum_m w_m c_{n+m}  <=>  kernel v_t = w_{-t}
    return weights[::-1]


def apply_kick(state: SpinorState, params: KickParams,
               leak_tol: float = KICK_LEAK_TOL) -> SpinorState:
    """One optical-lattice pulse: spin-dependent Bessel diffraction.

    Amplitude scattered beyond the lattice is dropped; if the dropped norm
    exceeds ``leak_tol`` a TruncationError carrying the loss is raised.
    """
    size = state.lattice.size
    new = np.empty_like(state.amplitudes)
    for column, k in ((0, params.k1), (1, params.k2)):
        if k == 0.0:
            new[:, column] = state.amplitudes[:, column]
            continue
        kernel = _kick_kernel(k)
        band = (len(kernel) - 1) // 2
        full = np.convolve(state.amplitudes[:, column], kernel)
        new[:, column] = full[band:band + size]
    loss = float(np.sum(state.probabilities()) - np.sum(np.abs(new) ** 2))
    if loss > leak_tol:
        raise TruncationError(
            f"kick leaked {loss:.3e} of the norm past the lattice edges "
            f"(tolerance {leak_tol:.1e}); enlarge the lattice margin",
            norm_loss=loss,
        )
    return state.with_amplitudes(new)


def apply_free_evolution(state: SpinorState, tau: float) -> SpinorState:
    """Kinetic phases e^{-i tau (n + beta)^2 / 2} between pulses.

    At tau = 4*pi and beta = 0 every phase is unity: the resonance that
    makes repeated kicks act as a clean ratchet.
    """
    phases = np.exp(-0.5j * tau * (state.momenta() + state.beta) ** 2)
    return state.with_amplitudes(state.amplitudes * phases[:, None])


def _shift_columns(state: SpinorState, up_q: int, down_q: int) -> SpinorState:
    """Translate spin-1 by up_q and spin-2 by -down_q with boundary checks."""
    size = state.lattice.size
    amps = state.amplitudes
    for q, column, edge in ((up_q, 0, "upper"), (down_q, 1, "lower")):
        block = amps[size - q:, column] if edge == "upper" else amps[:q, column]
        worst = float(np.max(np.abs(block))) if block.size else 0.0
        if worst >= OCCUPANCY_TOL:
            raise TruncationError(
                f"shift would push amplitude {worst:.3e} past the {edge} "
                f"lattice edge; enlarge the lattice",
                norm_loss=float(np.sum(np.abs(block) ** 2)),
            )
    new = np.zeros_like(amps)
    new[up_q:, 0] = amps[:size - up_q, 0]
    new[:size - down_q, 1] = amps[down_q:, 1]
    return state.with_amplitudes(new)


def ideal_shift(state: SpinorState, q: int = 1) -> SpinorState:
    """Spin-conditioned translation: |1> moves up q sites, |2> down q.

    Requires q unoccupied slots (amplitude < 1e-14) at the top of the
    spin-1 component and the bottom of the spin-2 component.
    """
    if q < 1:
        raise ValueError(f"shift step q must be a positive integer, got {q}")
    return _shift_columns(state, q, q)


def ideal_shift_dagger(state: SpinorState, q: int = 1) -> SpinorState:
    """Inverse of ideal_shift: |1> moves down q sites, |2> up q."""
    if q < 1:
        raise ValueError(f"shift step q must be a positive integer, got {q}")
    swapped = state.with_amplitudes(state.amplitudes[:, ::-1])
    shifted = _shift_columns(swapped, q, q)
    return state.with_amplitudes(shifted.amplitudes[:, ::-1])
