"""Bessel functions of the first kind at integer order.

Computed with a backward (Miller-type) three-term recurrence, normalized
through J_0(x) + 2*sum_k J_{2k}(x) = 1. The recurrence is started well
above both the requested order and the turning point |x| so the unwanted
solution is suppressed below double precision. Accuracy is validated
against an independent quadrature oracle for |x| <= 50, which is the
declared domain.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

MAX_ABS_ARGUMENT = 50.0

# Orders this far above max(|m|, |x|) seed the recurrence; 40 extra orders
# push the contaminating solution below ~1e-19 for |x| <= 50.
_START_MARGIN = 40

# |J_m(x)| < 1e-300 for m > ~2000 at |x| <= 50: below double-precision range.
_UNDERFLOW_ORDER = 2000

_RESCALE_LIMIT = 1e250


def _backward_sequence(m_max: int, x: float) -> np.ndarray:
    """J_0(x) .. J_{m_max}(x) for 0 < x <= MAX_ABS_ARGUMENT."""
    start = max(m_max, math.ceil(x)) + _START_MARGIN
    out = np.zeros(m_max + 1)
    j_above = 0.0
    j_here = 1e-30
    even_sum = 0.0
    for order in range(start, 0, -1):
        j_below = (2.0 * order / x) * j_here - j_above
        j_above = j_here
        j_here = j_below
        if order - 1 <= m_max:
            out[order - 1] = j_here
        if (order - 1) % 2 == 0 and order - 1 > 0:
            even_sum += 2.0 * j_here
        if abs(j_here) > _RESCALE_LIMIT:
            j_here *= 1e-250
            j_above *= 1e-250
            even_sum *= 1e-250
            out *= 1e-250
    return out / (out[0] + even_sum)


def bessel_j_sequence(m_max: int, x: float) -> np.ndarray:
    """Array of J_m(x) for m = 0 .. m_max; x must be nonnegative."""
    if x < 0.0:
        raise ValueError("bessel_j_sequence wants x >= 0; use bessel_j for signed x")
    if x > MAX_ABS_ARGUMENT:
        raise DomainError(
            f"|x| = {x} exceeds the validated domain |x| <= {MAX_ABS_ARGUMENT}"
        )
    if x == 0.0:
        out = np.zeros(m_max + 1)
        out[0] = 1.0
        return out
    return _backward_sequence(m_max, x)


def bessel_j(m: int, x: float) -> float:
    """J_m(x) for integer m, |x| <= 50, absolute error below 1e-12.

    Negative orders and arguments are reduced with
    J_{-m}(x) = (-1)^m J_m(x) and J_m(-x) = (-1)^m J_m(x).
    """
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x}")
    if abs(x) > MAX_ABS_ARGUMENT:
        raise DomainError(
            f"|x| = {abs(x)} exceeds the validated domain |x| <= {MAX_ABS_ARGUMENT}"
        )
    m = int(m)
    sign = 1.0
    if m < 0:
        m = -m
        if m % 2:
            sign = -sign
    if x < 0.0:
        x = -x
        if m % 2:
            sign = -sign
    if x == 0.0:
        return sign if m == 0 else 0.0
    if m > _UNDERFLOW_ORDER:
        return 0.0
    return sign * float(bessel_j_sequence(m, x)[m])


def bessel_j_orders(orders: np.ndarray, x: float) -> np.ndarray:
    """J_m(x) for an array of integer orders, via one backward pass."""
    orders = np.asarray(orders, dtype=np.int64)
    m_max = int(np.max(np.abs(orders))) if orders.size else 0
    ax = abs(x)
    seq = bessel_j_sequence(m_max, ax)
    vals = seq[np.abs(orders)]
    flip = np.where(orders < 0, np.abs(orders) % 2, 0)
    if x < 0.0:
        flip = flip + np.abs(orders) % 2
    return np.where(flip % 2 == 1, -vals, vals)
