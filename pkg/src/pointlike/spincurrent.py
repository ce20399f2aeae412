"""Spin-current continuity and the potential/magnetic classification.

A spinless junction is lifted to a Pauli spinor by acting identically on both
spin components. The spin term of the current is continuous across the origin
only if the junction preserves the bilinear ``conj(psi) psi'`` (not just its
imaginary part, which every junction preserves).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import BoundaryData, PointlikeError, apply_junction
from .extensions import ExtensionClass, lower
from .scattering import DEFAULT_K_GRID, time_reversal_check

PAIRING_TOL = 1e-12
TR_TOL = 1e-12


class UnclassifiedMatrix(PointlikeError):
    """The junction is outside the four canonical strata."""


@dataclass(frozen=True)
class SpinorBoundaryData:
    up: BoundaryData
    down: BoundaryData

    @classmethod
    def from_values(cls, up_psi, up_dpsi, down_psi, down_dpsi):
        return cls(BoundaryData(up_psi, up_dpsi), BoundaryData(down_psi, down_dpsi))


@dataclass(frozen=True)
class ClassificationReport:
    matrix: np.ndarray
    time_reversal_deviation: float
    time_reversal_ok: bool
    sesquilinear_ok: bool
    label: ExtensionClass


def pairing_defects(m):
    """Coefficients that must vanish for ``conj(psi) psi'`` to be preserved.

    Returns ``(conj(m11) m21, conj(m12) m22, conj(m12) m21, conj(m11) m22 - 1)``.
    """
    a = lower(m).array
    return np.array([
        np.conj(a[0, 0]) * a[1, 0],
        np.conj(a[0, 1]) * a[1, 1],
        np.conj(a[0, 1]) * a[1, 0],
        np.conj(a[0, 0]) * a[1, 1] - 1.0,
    ])


def preserves_pairing(m, tol=PAIRING_TOL):
    return bool(np.max(np.abs(pairing_defects(m))) <= tol)


def pairing_sampled(m, samples=100, seed=0, tol=1e-10):
    """Sampling check of :func:`preserves_pairing` on random boundary data."""
    m = lower(m)
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        g = BoundaryData.from_vector(v)
        out = apply_junction(m, g)
        before = np.conj(g.psi) * g.dpsi
        after = np.conj(out.psi) * out.dpsi
        if abs(after - before) > tol * (1.0 + g.norm2()) * max(1.0, np.abs(m.array).max() ** 2):
            return False
    return True


def _spin_bilinears(s):
    u, d = s.up, s.down
    # d/dx (|u|^2 - |d|^2) and d/dx (conj(u) d - conj(d) u) from boundary values
    dy = 2.0 * (np.conj(u.psi) * u.dpsi).real - 2.0 * (np.conj(d.psi) * d.dpsi).real
    dz = (
        np.conj(u.dpsi) * d.psi + np.conj(u.psi) * d.dpsi
        - np.conj(d.dpsi) * u.psi - np.conj(d.psi) * u.dpsi
    )
    return float(dy), complex(dz)


def spin_term_jumps(m, s):
    """Jumps across the origin of the y- and z-spin-current derivatives.

    Returns ``(jump_y, jump_z)``, right side minus left side, with ``m``
    applied to each spin component.
    """
    m = lower(m)
    right = SpinorBoundaryData(apply_junction(m, s.up), apply_junction(m, s.down))
    y_r, z_r = _spin_bilinears(right)
    y_l, z_l = _spin_bilinears(s)
    return y_r - y_l, z_r - z_l


def classify(m, k_grid=DEFAULT_K_GRID):
    """Place a junction in one of the canonical strata.

    Uses time-reversal symmetry of S and preservation of ``conj(psi) psi'``
    together with the shape of the matrix:

    - identity                                   -> FREE
    - unit lower-triangular, T-symmetric         -> PURE_POTENTIAL
    - unit upper-triangular, T-symmetric         -> MASS_JUMP
    - scalar phase, pairing preserved            -> MAGNETIC
    - real diagonal diag(c, 1/c), c != +-1       -> MAGNETIC_MASS_JUMP

    Anything else raises UnclassifiedMatrix.
    """
    jm = lower(m)
    a = jm.array
    tr_dev = time_reversal_check(jm, k_grid)
    tr_ok = tr_dev <= TR_TOL * max(1.0, np.abs(a).max())
    pair_ok = preserves_pairing(jm)
    tol = 1e-12 * max(1.0, np.abs(a).max())

    def close(x, y):
        return abs(x - y) <= tol

    diagonal = close(a[0, 1], 0) and close(a[1, 0], 0)
    scalar = diagonal and close(a[0, 0], a[1, 1])
    real = np.all(np.abs(a.imag) <= tol)

    if scalar and close(a[0, 0], 1):
        label = ExtensionClass.FREE
    elif scalar and pair_ok:
        # exp(i pi) I is T-symmetric yet still a flux; the shape decides
        label = ExtensionClass.MAGNETIC
    elif diagonal and real and pair_ok and tr_ok:
        label = ExtensionClass.MAGNETIC_MASS_JUMP
    elif tr_ok and not pair_ok and close(a[0, 0], 1) and close(a[1, 1], 1):
        if close(a[0, 1], 0):
            label = ExtensionClass.PURE_POTENTIAL
        elif close(a[1, 0], 0):
            label = ExtensionClass.MASS_JUMP
        else:
            raise UnclassifiedMatrix(f"not a canonical junction: {jm!r}")
    else:
        raise UnclassifiedMatrix(f"not a canonical junction: {jm!r}")
    return ClassificationReport(a.copy(), tr_dev, bool(tr_ok), pair_ok, label)
