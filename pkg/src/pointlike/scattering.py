"""Scattering matrices of point interactions.

The generic solver matches the plane-wave states

    psi_1 = exp(ikx) + A+ exp(-ikx)   (x < 0),   B+ exp(ikx)                (x > 0)
    psi_2 = B- exp(-ikx)              (x < 0),   exp(-ikx) + A- exp(ikx)    (x > 0)

through ``Gamma(0+) = M Gamma(0-)`` and assembles ``S = [[A+, B+], [B-, A-]]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import InvalidParameter, PointlikeError, as_matrix
from .extensions import (
    DeltaOne,
    DeltaPotential,
    DeltaPrime,
    MagneticFlux,
    lower,
)

DEFAULT_K_GRID = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0)
UNITARITY_TOL = 1e-12


class SingularMatching(PointlikeError):
    """The matching system has no unique solution at this k."""


@dataclass(frozen=True)
class ChannelProbabilities:
    R: float
    T: float


@dataclass(frozen=True, eq=False)
class ScatteringMatrix:
    matrix: np.ndarray
    k: float

    @property
    def a_plus(self):
        return complex(self.matrix[0, 0])

    @property
    def b_plus(self):
        return complex(self.matrix[0, 1])

    @property
    def b_minus(self):
        return complex(self.matrix[1, 0])

    @property
    def a_minus(self):
        return complex(self.matrix[1, 1])

    def unitarity_residual(self):
        s = self.matrix
        return float(np.max(np.abs(s.conj().T @ s - np.eye(2))))

    def __array__(self, dtype=None, copy=None):
        return self.matrix.astype(dtype) if dtype is not None else self.matrix.copy()


def _solve(m, k):
    # Work with (psi, psi'/(ik)) so both matching rows are O(1) for any k.
    a = as_matrix(m)
    ik = 1j * k
    n = np.array([[a[0, 0], ik * a[0, 1]], [a[1, 0] / ik, a[1, 1]]])
    u = n @ np.array([1.0, 1.0])   # image of the incoming part (1, 1)
    v = n @ np.array([1.0, -1.0])  # image of (1, -1)

    # left incidence: N (1+A, 1-A) = (B, B)  ->  A v - B (1, 1) = -u
    lhs = np.array([[v[0], -1.0], [v[1], -1.0]])
    # right incidence: N (B, -B) = (1+A, A-1)  ->  B v - A (1, 1) = (1, -1),
    # the same coefficient matrix with unknowns (B-, A-)
    scale = max(1.0, float(np.max(np.abs(lhs))))
    det = lhs[0, 0] * lhs[1, 1] - lhs[0, 1] * lhs[1, 0]
    if abs(det) <= 1e-14 * scale * scale:
        raise SingularMatching(f"matching system is singular at k = {k!r}")
    a_p, b_p = np.linalg.solve(lhs, -u)
    b_m, a_m = np.linalg.solve(lhs, np.array([1.0, -1.0]))
    return np.array([[a_p, b_p], [b_m, a_m]], dtype=complex)


def smatrix(m, k):
    """Scattering matrix of the junction ``m`` (matrix or family) at wavenumber ``k > 0``."""
    k = float(k)
    if not (k > 0 and math.isfinite(k)):
        raise InvalidParameter("k must be positive and finite")
    return ScatteringMatrix(_solve(lower(m), k), k)


def smatrix_continued(m, k):
    """Solve the same matching system at a nonzero real k of either sign.

    ``k < 0`` swaps the roles of exp(ikx) and exp(-ikx); this is the analytic
    continuation used by :func:`time_reversal_check`.
    """
    k = float(k)
    if k == 0 or not math.isfinite(k):
        raise InvalidParameter("k must be nonzero and finite")
    return ScatteringMatrix(_solve(lower(m), k), k)


def delta_one_angle(x2):
    """Angle theta in [0, 2 pi) with tan(theta/2) = (2 + x2)/(2 - x2)."""
    x2 = DeltaOne(x2).x2
    return (2.0 * math.atan2(2.0 + x2, 2.0 - x2)) % (2.0 * math.pi)


def closed_form_smatrix(family, k):
    """Textbook closed forms for the four canonical families."""
    k = float(k)
    if not (k > 0 and math.isfinite(k)):
        raise InvalidParameter("k must be positive and finite")
    if isinstance(family, DeltaPotential):
        x1 = family.x1
        s = np.array([[-1j * x1, 2 * k], [2 * k, -1j * x1]]) / (2 * k + 1j * x1)
    elif isinstance(family, DeltaPrime):
        x4 = family.x4
        s = np.array([[1j * k * x4, 2], [2, 1j * k * x4]]) / (2 + 1j * k * x4)
    elif isinstance(family, MagneticFlux):
        w = np.exp(2j * np.pi * family.alpha)
        s = np.array([[0, w], [np.conj(w), 0]])
    elif isinstance(family, DeltaOne):
        theta = delta_one_angle(family.x2)
        c, sn = math.cos(theta), math.sin(theta)
        s = np.array([[c, sn], [sn, -c]])
    else:
        raise InvalidParameter(f"no closed form for {type(family).__name__}")
    return ScatteringMatrix(np.asarray(s, dtype=complex), k)


def reflection_transmission(s):
    """Left-incidence probabilities ``R = |A+|^2`` and ``T = |B+|^2``."""
    return ChannelProbabilities(abs(s.a_plus) ** 2, abs(s.b_plus) ** 2)


def time_reversal_check(m, k_grid=DEFAULT_K_GRID):
    """Largest ``|S(k)* - S(-k)|`` over the grid.

    Zero (to rounding) for potential, i.e. time-reversal symmetric, junctions.
    """
    m = lower(m)
    dev = 0.0
    for k in k_grid:
        if not k > 0:
            raise InvalidParameter("k grid must be positive")
        s_pos = smatrix(m, k).matrix
        s_neg = smatrix_continued(m, -k).matrix
        dev = max(dev, float(np.max(np.abs(s_pos.conj() - s_neg))))
    return dev


def sweep(m, ks):
    """Rows ``(k, R, T, unitarity_residual)`` over a sequence of wavenumbers."""
    m = lower(m)
    rows = []
    for k in ks:
        s = smatrix(m, k)
        p = reflection_transmission(s)
        rows.append((float(k), p.R, p.T, s.unitarity_residual()))
    return rows
