"""Walk protocols: standard, biased, noisy, reversed, and ensembles.

One walk step is a coin toss followed by a spin-conditioned momentum
shift. The shift comes in two realizations: the ideal translation
operator, and a kicked-rotor ratchet (kick + free evolution at quantum
resonance) whose opposite-sign strengths move the two internal states in
opposite directions.

Monte Carlo ensembles average probabilities, never amplitudes: each
sample stands for an independent experimental shot with its own
quasimomentum and noise realization.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np

from .coin import (
    FIRST_COIN,
    REFLECTION_COIN,
    STEP_COIN,
    UNREFLECTION_COIN,
    CoinParams,
    apply_coin,
    biased_params,
    conjugate_params,
)
from .errors import TruncationError
from .operators import (
    STANDARD_KICK,
    KickParams,
    apply_free_evolution,
    apply_kick,
    ideal_shift,
    ideal_shift_dagger,
    kick_band_half_width,
)
from .states import MomentumLattice, SpinorState, initial_ratchet_state

DEFAULT_SEED = 42  # fixed so omitted seeds still reproduce bit-for-bit

IDEAL = "ideal"
RATCHET = "ratchet"

# Distributions recorded along a trajectory must stay normalized to this
# tolerance (truncation leakage is checked per kick as well).
TRAJECTORY_NORM_TOL = 1e-9

# Fig-style biased-walk parameter points.
BIASED_COIN_WEIGHT = 0.7
BIASED_RATCHET_KICK = KickParams(-1.7, 1.0)


@dataclass(frozen=True)
class WalkConfig:
    """Full specification of a single walk run."""

    steps: int
    shift_mode: str = RATCHET
    q: int = 1
    kick: KickParams = STANDARD_KICK
    first_coin: CoinParams = FIRST_COIN
    step_coin: CoinParams = STEP_COIN
    noise_eps: float = 0.0
    phi: float = math.pi / 2
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.steps < 0:
            raise ValueError(f"steps must be nonnegative, got {self.steps}")
        if self.shift_mode not in (IDEAL, RATCHET):
            raise ValueError(
                f"shift_mode must be '{IDEAL}' or '{RATCHET}', got {self.shift_mode!r}"
            )
        if self.q < 1:
            raise ValueError(f"q must be a positive integer, got {self.q}")
        if not 0.0 <= self.noise_eps <= 1.0:
            raise ValueError(f"noise_eps must lie in [0, 1], got {self.noise_eps}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class EnsembleSpec:
    """Monte Carlo averaging: quasimomentum spread plus a thermal pedestal."""

    n_samples: int = 1
    sigma_beta: float = 0.0
    thermal_fraction: float = 0.0
    thermal_sigma: float = 2.0

    def __post_init__(self):
        if self.n_samples < 1:
            raise ValueError(f"n_samples must be >= 1, got {self.n_samples}")
        if self.sigma_beta < 0.0:
            raise ValueError(f"sigma_beta must be >= 0, got {self.sigma_beta}")
        if not 0.0 <= self.thermal_fraction <= 1.0:
            raise ValueError(
                f"thermal_fraction must lie in [0, 1], got {self.thermal_fraction}"
            )
        if self.thermal_sigma <= 0.0:
            raise ValueError(f"thermal_sigma must be > 0, got {self.thermal_sigma}")


@dataclass
class WalkTrajectory:
    """Per-step spin-resolved momentum distributions, plus optional states."""

    lattice: MomentumLattice
    beta: float
    distributions: np.ndarray  # (n_steps + 1, lattice.size, 2)
    config: WalkConfig
    states: Optional[list] = None

    @property
    def n_steps(self) -> int:
        return self.distributions.shape[0] - 1

    def spin_distribution(self, step: int, spin: int) -> np.ndarray:
        return self.distributions[step, :, spin - 1]

    def total_distribution(self, step: int) -> np.ndarray:
        return self.distributions[step].sum(axis=1)


@dataclass
class EnsembleTrajectory(WalkTrajectory):
    """Sample-averaged trajectory; fidelities are per-sample |<init|final>|^2."""

    spec: EnsembleSpec = field(default_factory=EnsembleSpec)
    sample_fidelities: Optional[np.ndarray] = None

    @property
    def mean_fidelity(self) -> float:
        return float(np.mean(self.sample_fidelities))


def walk_lattice(config: WalkConfig, margin: int = 40) -> MomentumLattice:
    """Lattice wide enough for the run plus a leakage margin.

    Coherent kicks can compound, so the occupied window grows at most like
    steps * ceil(k_max) (or steps * q in ideal mode); the margin keeps the
    Bessel tails and the shift's boundary slots clear.
    """
    if config.shift_mode == IDEAL:
        reach = config.q * (config.steps + 1) + 1
        half = reach + max(2, margin // 8)
    else:
        reach = math.ceil(config.steps * max(config.kick.k_max, 1.0))
        half = reach + max(margin, kick_band_half_width(config.kick.k_max) + 5)
    return MomentumLattice(-half, half + 1)


def sample_noisy_coin(base: CoinParams, eps: float,
                      rng: np.random.Generator) -> CoinParams:
    """Randomize the coin phase: chi + delta, delta ~ U(-eps*pi, +eps*pi)."""
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"noise level must lie in [0, 1], got {eps}")
    if eps == 0.0:
        return base
    return CoinParams(base.alpha, base.chi + rng.uniform(-eps * math.pi, eps * math.pi))


def resolve_step_coins(config: WalkConfig,
                       rng: Optional[np.random.Generator] = None) -> list[CoinParams]:
    """The coin actually tossed at each step, noise included.

    Step 1 uses the first (Hadamard-like) coin, later steps the step coin;
    with noise on, every toss gets a fresh phase draw.
    """
    if rng is None:
        rng = np.random.default_rng(config.seed)
    coins = []
    for step in range(1, config.steps + 1):
        base = config.first_coin if step == 1 else config.step_coin
        coins.append(sample_noisy_coin(base, config.noise_eps, rng))
    return coins


def apply_shift(state: SpinorState, config: WalkConfig) -> SpinorState:
    """The spin-conditioned shift in the configured realization."""
    if config.shift_mode == IDEAL:
        return ideal_shift(state, config.q)
    state = apply_kick(state, config.kick)
    return apply_free_evolution(state, config.kick.tau)


def apply_shift_dagger(state: SpinorState, config: WalkConfig) -> SpinorState:
    """Exact inverse of apply_shift (negated kick and reversed phases)."""
    if config.shift_mode == IDEAL:
        return ideal_shift_dagger(state, config.q)
    state = apply_free_evolution(state, -config.kick.tau)
    inverted = KickParams(-config.kick.k1, -config.kick.k2, config.kick.tau)
    return apply_kick(state, inverted)


def walk_step(state: SpinorState, coin: CoinParams,
              config: WalkConfig) -> SpinorState:
    """One walk step: coin toss, then the shift."""
    return apply_shift(apply_coin(state, coin), config)


def _check_norm(dist: np.ndarray, step: int):
    total = float(dist.sum())
    if abs(total - 1.0) > TRAJECTORY_NORM_TOL:
        raise TruncationError(
            f"step {step}: recorded distribution sums to {total!r}",
            norm_loss=1.0 - total, step=step,
        )


def _record(state: SpinorState) -> np.ndarray:
    return state.probabilities()


def run_walk(config: WalkConfig, lattice: Optional[MomentumLattice] = None,
             initial: Optional[SpinorState] = None, *,
             rng: Optional[np.random.Generator] = None,
             retain_states: bool = True) -> WalkTrajectory:
    """Execute the configured walk and record every step's distribution."""
    if lattice is None:
        lattice = walk_lattice(config)
    if initial is None:
        initial = initial_ratchet_state(lattice, config.phi)
    coins = resolve_step_coins(config, rng)
    state = initial.copy()
    dists = [_record(state)]
    states = [state] if retain_states else None
    for step, coin in enumerate(coins, start=1):
        try:
            state = walk_step(state, coin, config)
        except TruncationError as err:
            err.step = step
            raise
        dists.append(_record(state))
        _check_norm(dists[-1], step)
        if retain_states:
            states.append(state)
    return WalkTrajectory(lattice, initial.beta, np.array(dists), config, states)


def run_biased_coin_walk(config: WalkConfig,
                         lattice: Optional[MomentumLattice] = None,
                         initial: Optional[SpinorState] = None, *,
                         weight: float = BIASED_COIN_WEIGHT,
                         rng: Optional[np.random.Generator] = None,
                         retain_states: bool = True) -> WalkTrajectory:
    """Steered walk via unequal internal-state superpositions.

    Every microwave pulse is rebalanced (its rotation angle changed so a
    toss yields populations weight/1-weight) while the pulse phases stay
    those of the standard protocol. weight = 0.5 recovers the symmetric
    walk. Rebalancing only the per-step coin would leave the mean momentum
    pinned; the drift needs the first toss rebalanced too.
    """
    biased = replace(
        config,
        first_coin=biased_params(weight, config.first_coin.chi),
        step_coin=biased_params(weight, config.step_coin.chi),
    )
    return run_walk(biased, lattice, initial, rng=rng, retain_states=retain_states)


def run_biased_ratchet_walk(config: WalkConfig,
                            lattice: Optional[MomentumLattice] = None,
                            initial: Optional[SpinorState] = None, *,
                            kick: KickParams = BIASED_RATCHET_KICK,
                            rng: Optional[np.random.Generator] = None,
                            retain_states: bool = True) -> WalkTrajectory:
    """Steered walk via unequal kick strengths for the two internal states."""
    biased = replace(config, shift_mode=RATCHET, kick=kick)
    if lattice is None:
        lattice = walk_lattice(biased)
    return run_walk(biased, lattice, initial, rng=rng, retain_states=retain_states)


COMPOSED = "composed"
DIRECT = "direct"


def _reversed_step(state: SpinorState, coin: CoinParams, config: WalkConfig,
                   method: str, eps: float,
                   rng: np.random.Generator) -> SpinorState:
    """Undo one forward step that used ``coin``.

    direct: apply the exact operator adjoints (inverse shift, then the
    conjugate coin). composed: realize the inverse shift with the same
    pulses the forward walk uses, sandwiched between spin-swapping pi
    pulses. The two coincide at exact resonance; off resonance only the
    composed form reproduces the experimentally implementable sequence,
    whose reversal degrades with quasimomentum.
    """
    conj = conjugate_params(coin)
    if method == DIRECT:
        state = apply_shift_dagger(state, config)
        return apply_coin(state, sample_noisy_coin(conj, eps, rng))
    state = apply_coin(state, sample_noisy_coin(REFLECTION_COIN, eps, rng))
    state = apply_shift(state, config)
    state = apply_coin(state, sample_noisy_coin(UNREFLECTION_COIN, eps, rng))
    return apply_coin(state, sample_noisy_coin(conj, eps, rng))


def run_reversed_walk(config: WalkConfig, j_forward: int,
                      lattice: Optional[MomentumLattice] = None,
                      initial: Optional[SpinorState] = None, *,
                      method: str = COMPOSED,
                      rng: Optional[np.random.Generator] = None,
                      retain_states: bool = True) -> WalkTrajectory:
    """j_forward standard steps, then their conjugates in reverse order.

    Trajectory entries run from step 0 through step 2*j_forward; entry
    2*j_forward is the reversed system, to be compared with the initial
    state.
    """
    if j_forward < 1:
        raise ValueError(f"j_forward must be >= 1, got {j_forward}")
    if method not in (COMPOSED, DIRECT):
        raise ValueError(f"method must be '{COMPOSED}' or '{DIRECT}', got {method!r}")
    forward = replace(config, steps=j_forward)
    if lattice is None:
        lattice = walk_lattice(forward)
    if initial is None:
        initial = initial_ratchet_state(lattice, config.phi)
    if rng is None:
        rng = np.random.default_rng(config.seed)

    coins = resolve_step_coins(forward, rng)
    state = initial.copy()
    dists = [_record(state)]
    states = [state] if retain_states else None
    step_counter = 0
    try:
        for coin in coins:
            step_counter += 1
            state = walk_step(state, coin, forward)
            dists.append(_record(state))
            _check_norm(dists[-1], step_counter)
            if retain_states:
                states.append(state)
        for coin in reversed(coins):
            step_counter += 1
            state = _reversed_step(state, coin, forward, method,
                                   config.noise_eps, rng)
            dists.append(_record(state))
            _check_norm(dists[-1], step_counter)
            if retain_states:
                states.append(state)
    except TruncationError as err:
        err.step = step_counter
        raise
    return WalkTrajectory(lattice, initial.beta, np.array(dists), config, states)


RunCallable = Callable[..., WalkTrajectory]


def ensemble_rngs(seed: int, n_samples: int) -> list[np.random.Generator]:
    """One independent, reproducible generator per ensemble sample."""
    return [np.random.default_rng(child)
            for child in np.random.SeedSequence(seed).spawn(n_samples)]


def thermal_background(lattice: MomentumLattice, sigma: float) -> np.ndarray:
    """Discretized zero-mean Gaussian over the lattice, normalized to 1."""
    n = lattice.momenta().astype(float)
    weights = np.exp(-0.5 * (n / sigma) ** 2)
    return weights / weights.sum()


def _one_sample(index: int, config: WalkConfig, spec: EnsembleSpec,
                lattice: MomentumLattice, rng: np.random.Generator,
                run: RunCallable):
    beta = float(rng.normal(0.0, spec.sigma_beta) % 1.0) if spec.sigma_beta > 0 else 0.0
    initial = initial_ratchet_state(lattice, config.phi, beta=beta)
    traj = run(config, lattice, initial, rng=rng, retain_states=True)
    first, last = traj.states[0], traj.states[-1]
    fid = abs(np.vdot(first.amplitudes, last.amplitudes)) ** 2
    return traj.distributions, float(fid)


def run_ensemble(config: WalkConfig, spec: EnsembleSpec,
                 lattice: Optional[MomentumLattice] = None, *,
                 run: RunCallable = run_walk,
                 threads: int = 1) -> EnsembleTrajectory:
    """Average a walk over quasimomenta and noise realizations.

    Each sample draws its quasimomentum from a folded Gaussian and its
    coin-phase noise from a spawned child generator, runs independently,
    and contributes its probability distributions to the average (fixed
    summation order, so results are bit-reproducible for a given seed and
    any thread count). A static thermal pedestal is mixed in afterwards:
    P = (1 - f) * P_walk + f * Gaussian, renormalized exactly.
    """
    if lattice is None:
        lattice = walk_lattice(config)
    rngs = ensemble_rngs(config.seed, spec.n_samples)

    def job(i):
        return _one_sample(i, config, spec, lattice, rngs[i], run)

    if threads == 0:
        threads = None  # ThreadPoolExecutor default: cpu-count based
    if threads == 1:
        results = [job(i) for i in range(spec.n_samples)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(job, range(spec.n_samples)))

    acc = np.zeros_like(results[0][0])
    for dist, _ in results:  # fixed order: sample 0, 1, ...
        acc += dist
    acc /= spec.n_samples

    if spec.thermal_fraction > 0.0:
        pedestal = thermal_background(lattice, spec.thermal_sigma)
        acc = (1.0 - spec.thermal_fraction) * acc \
            + 0.5 * spec.thermal_fraction * pedestal[None, :, None]
        acc /= acc.sum(axis=(1, 2), keepdims=True)

    fidelities = np.array([fid for _, fid in results])
    return EnsembleTrajectory(lattice, 0.0, acc, config, None,
                              spec=spec, sample_fidelities=fidelities)
