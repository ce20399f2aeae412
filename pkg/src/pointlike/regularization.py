"""Finite-width magnetic strip and its zero-width limit.

Inside the strip ``0 <= x <= w`` the transverse mode obeys

    chi'' + (eps - 4 (alpha x)^2) chi = 0

(dimensionless variables, offset x0 = 0). The strip transfer matrix is
obtained by fixed-step RK4 integration of the two fundamental solutions, and
the gauge phase ``exp(2 pi i alpha)`` picked up across the flux is applied on
top. As ``w -> 0`` at fixed alpha the result tends to ``exp(2 pi i alpha) I``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import InvalidParameter, JunctionMatrix, PointlikeError

DEFAULT_STEPS = 1000
MIN_STEPS = 100
MAX_PHASE_PER_STEP = 0.1


class ResolutionError(PointlikeError):
    pass


@dataclass(frozen=True)
class StripProblem:
    alpha: float
    epsilon: float
    width: float

    def __post_init__(self):
        for name in ("alpha", "epsilon", "width"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParameter(f"{name} must be finite")
        if not self.epsilon > 0:
            raise InvalidParameter("epsilon must be positive")
        if not self.width > 0:
            raise InvalidParameter("width must be positive")

    def potential(self, x):
        return 4.0 * (self.alpha * x) ** 2 - self.epsilon


def _check_resolution(p, steps):
    if int(steps) != steps or steps < MIN_STEPS:
        raise ResolutionError(f"need at least {MIN_STEPS} integration steps, got {steps}")
    h = p.width / steps
    if h * math.sqrt(abs(p.epsilon)) > MAX_PHASE_PER_STEP:
        raise ResolutionError(
            f"step {h:.3g} too coarse for epsilon = {p.epsilon}: "
            f"h*sqrt(eps) = {h * math.sqrt(p.epsilon):.3g} > {MAX_PHASE_PER_STEP}"
        )
    return int(steps), h


def free_transfer(epsilon, width):
    """Exact transfer matrix of ``chi'' + eps chi = 0`` across ``width``."""
    q = math.sqrt(epsilon)
    c, s = math.cos(q * width), math.sin(q * width)
    return np.array([[c, s / q], [-q * s, c]])


def strip_transfer(p, steps=DEFAULT_STEPS):
    """Real 2x2 matrix mapping ``(chi, chi')(0)`` to ``(chi, chi')(width)``."""
    n, h = _check_resolution(p, steps)
    # columns are the fundamental solutions started from (1,0) and (0,1)
    y = np.eye(2)

    def f(x, y):
        return np.array([y[1], p.potential(x) * y[0]])

    x = 0.0
    for i in range(n):
        k1 = f(x, y)
        k2 = f(x + h / 2, y + h / 2 * k1)
        k3 = f(x + h / 2, y + h / 2 * k2)
        k4 = f(x + h, y + h * k3)
        y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        x = (i + 1) * h
    return y


def regularized_junction(p, steps=DEFAULT_STEPS):
    """Junction across the strip of finite width, gauge phase included."""
    t = strip_transfer(p, steps)
    phase = np.exp(2j * np.pi * p.alpha)
    return JunctionMatrix(phase * t, tol=1e-9)


def limit_junction(alpha):
    return np.exp(2j * np.pi * alpha) * np.eye(2)


@dataclass(frozen=True)
class ConvergenceRow:
    width: float
    deviation: float
    value_deviation: float
    derivative_deviation: float
    empirical_order: float | None


def convergence_study(alpha, epsilon, widths, steps=DEFAULT_STEPS):
    """Distance of the finite-width junction from ``exp(2 pi i alpha) I``.

    ``value_deviation`` and ``derivative_deviation`` are the max-norm
    deviations of the rows acting on psi and on psi' separately, so the phase
    jump of the derivative is checked rather than assumed.
    ``empirical_order`` is ``log(d_prev/d)/log(w_prev/w)`` (None on the first row).
    """
    widths = [float(w) for w in widths]
    if not widths:
        raise InvalidParameter("widths must be non-empty")
    if any(a <= b for a, b in zip(widths, widths[1:])):
        raise InvalidParameter("widths must be strictly descending")
    target = limit_junction(alpha)
    rows = []
    prev = None
    for w in widths:
        m = regularized_junction(StripProblem(alpha, epsilon, w), steps).array
        diff = np.abs(m - target)
        dev = float(diff.max())
        order = None
        if prev is not None and dev > 0 and prev[1] > 0:
            order = math.log(prev[1] / dev) / math.log(prev[0] / w)
        rows.append(ConvergenceRow(w, dev, float(diff[0].max()), float(diff[1].max()), order))
        prev = (w, dev)
    return rows
