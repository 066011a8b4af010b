"""Observables and diagnostics over states and trajectories."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .protocols import WalkTrajectory
from .states import SpinorState


@dataclass(frozen=True)
class MomentumDistribution:
    """Site populations of one state: total and per internal state."""

    momenta: np.ndarray
    total: np.ndarray
    spin1: np.ndarray
    spin2: np.ndarray


@dataclass(frozen=True)
class MomentStats:
    """Per-step mean momentum, spread, and mean kinetic energy."""

    mean: np.ndarray
    variance: np.ndarray
    std: np.ndarray
    energy: np.ndarray  # <(n + beta)^2> / 2


@dataclass(frozen=True)
class ScalingFit:
    """Power-law fit sigma(j) ~ amplitude * j^exponent."""

    exponent: float
    amplitude: float
    residual: float
    j_range: tuple[int, int]


def momentum_distribution(state: SpinorState) -> MomentumDistribution:
    probs = state.probabilities()
    return MomentumDistribution(
        momenta=state.momenta(),
        total=probs.sum(axis=1),
        spin1=probs[:, 0],
        spin2=probs[:, 1],
    )


def _distribution_moments(dists: np.ndarray, momenta: np.ndarray,
                          beta: float) -> MomentStats:
    p = dists.sum(axis=-1)
    values = momenta + beta
    mean = p @ values
    second = p @ values ** 2
    variance = np.maximum(second - mean ** 2, 0.0)
    return MomentStats(mean=mean, variance=variance,
                       std=np.sqrt(variance), energy=second / 2.0)


def moments(trajectory: WalkTrajectory) -> MomentStats:
    """Moment series over every recorded step of a trajectory."""
    return _distribution_moments(trajectory.distributions,
                                 trajectory.lattice.momenta().astype(float),
                                 trajectory.beta)


def state_moments(trajectory_or_state) -> MomentStats:
    """Moments of a single state (length-1 series)."""
    state = trajectory_or_state
    return _distribution_moments(state.probabilities()[None, :, :],
                                 state.momenta().astype(float), state.beta)


def fidelity(a: SpinorState, b: SpinorState) -> float:
    """|<a|b>|^2 with the spin sum; insensitive to global phases."""
    if a.lattice != b.lattice:
        raise ValueError(
            f"states live on different lattices: {a.lattice} vs {b.lattice}"
        )
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2)


def scaling_exponent(std_series: Sequence[float],
                     j_range: Sequence[int]) -> ScalingFit:
    """Least-squares slope of log(sigma) against log(j).

    std_series is indexed by step number (entry j is the spread after j
    steps); j_range lists the steps entering the fit.
    """
    js = np.asarray(list(j_range), dtype=float)
    if js.size < 4:
        raise ValueError(f"need at least 4 steps for a fit, got {js.size}")
    if np.any(js <= 0):
        raise ValueError("fit steps must be positive")
    sigma = np.asarray([std_series[int(j)] for j in js], dtype=float)
    if np.any(sigma <= 0.0):
        raise ValueError("all std values in the fit range must be positive")
    slope, intercept = np.polyfit(np.log(js), np.log(sigma), 1)
    fitted = slope * np.log(js) + intercept
    residual = float(np.sqrt(np.mean((np.log(sigma) - fitted) ** 2)))
    return ScalingFit(exponent=float(slope), amplitude=float(math.exp(intercept)),
                      residual=residual, j_range=(int(js[0]), int(js[-1])))


# Occupied support for the peak diagnostic: sites carrying at least this
# fraction of the distribution's maximum.
SUPPORT_REL_TOL = 1e-3


def peak_center_ratio(p: np.ndarray, support_rel_tol: float = SUPPORT_REL_TOL) -> float:
    """Ballistic-peak prominence: max(P) outside the central third of the
    occupied support divided by max(P) inside it.

    Above 1 the edge peaks dominate (walk-like distribution); below 1 the
    center does (diffusive, Gaussian-like). The central third is taken of
    the index span of sites holding >= support_rel_tol of the maximum.
    """
    p = np.asarray(p, dtype=float)
    if p.size == 0 or np.max(p) <= 0.0:
        raise ValueError("distribution has empty support")
    occupied = np.nonzero(p >= support_rel_tol * np.max(p))[0]
    lo, hi = int(occupied[0]), int(occupied[-1])
    span = hi - lo + 1
    if span < 5:
        raise ValueError(f"support spans only {span} sites; need at least 5")
    third = span // 3
    c_lo, c_hi = lo + third, hi - third
    central = float(np.max(p[c_lo:c_hi + 1]))
    outside = max(
        float(np.max(p[lo:c_lo])) if c_lo > lo else 0.0,
        float(np.max(p[c_hi + 1:hi + 1])) if c_hi < hi else 0.0,
    )
    return outside / central
