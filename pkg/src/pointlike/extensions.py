"""Canonical point interactions and the general (x, y, z) chart.

The four one-parameter families are

    I    DeltaPotential(x1)   [[1, 0], [x1, 1]]
    II   DeltaPrime(x4)       [[1, -x4], [0, 1]]
    III  MagneticFlux(alpha)  exp(2 pi i alpha) * I
    IV   DeltaOne(x2)         diag((2 + x2)/(2 - x2), (2 - x2)/(2 + x2))

Families are kept symbolic (tag + parameter) and lowered to matrices by
:func:`junction_of`, so group laws can be checked against matrix products.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import InvalidParameter, JunctionMatrix, as_matrix, compose

__all__ = [
    "ExtensionClass",
    "DeltaPotential",
    "DeltaPrime",
    "MagneticFlux",
    "DeltaOne",
    "Chart",
    "Raw",
    "CANONICAL_FAMILIES",
    "junction_of",
    "flux_of_x3",
    "generator",
    "generator_gram",
    "compose",
]


class ExtensionClass(enum.Enum):
    FREE = "free"
    PURE_POTENTIAL = "δ-potential"
    MASS_JUMP = "mass jump"
    MAGNETIC = "magnetic"
    MAGNETIC_MASS_JUMP = "magnetic & mass jump"


def _real(value, name):
    v = float(value)
    if not math.isfinite(v):
        raise InvalidParameter(f"{name} must be finite, got {value!r}")
    return v


@dataclass(frozen=True)
class DeltaPotential:
    x1: float

    row = "I"
    group = "(1,0)"
    label = ExtensionClass.PURE_POTENTIAL

    def __post_init__(self):
        object.__setattr__(self, "x1", _real(self.x1, "x1"))

    @property
    def parameter(self):
        return self.x1

    def matrix(self):
        return np.array([[1.0, 0.0], [self.x1, 1.0]], dtype=complex)


@dataclass(frozen=True)
class DeltaPrime:
    x4: float

    row = "II"
    group = "R+"
    label = ExtensionClass.MASS_JUMP

    def __post_init__(self):
        object.__setattr__(self, "x4", _real(self.x4, "x4"))

    @property
    def parameter(self):
        return self.x4

    def matrix(self):
        return np.array([[1.0, -self.x4], [0.0, 1.0]], dtype=complex)


@dataclass(frozen=True)
class MagneticFlux:
    """Localized flux ``alpha = Phi/Phi0``.

    ``alpha`` is reduced to [0, 1); the integer number of flux quanta that was
    split off is kept in ``quanta``. The junction matrix does not see it.
    """

    alpha: float
    quanta: int = 0

    row = "III"
    group = "U(1)"
    label = ExtensionClass.MAGNETIC

    def __post_init__(self):
        a = _real(self.alpha, "alpha")
        n = math.floor(a)
        frac = a - n
        if frac >= 1.0:  # a slightly below an integer can round up
            frac, n = 0.0, n + 1
        object.__setattr__(self, "alpha", frac)
        object.__setattr__(self, "quanta", int(self.quanta) + n)

    @property
    def parameter(self):
        return self.alpha

    @property
    def flux(self):
        return self.quanta + self.alpha

    def matrix(self):
        return np.exp(2j * np.pi * self.alpha) * np.eye(2, dtype=complex)


@dataclass(frozen=True)
class DeltaOne:
    x2: float

    row = "IV"
    group = "R+ x Z"
    label = ExtensionClass.MAGNETIC_MASS_JUMP

    def __post_init__(self):
        x2 = _real(self.x2, "x2")
        if abs(x2) == 2.0:
            raise InvalidParameter("x2 = ±2 decouples the half-lines; no junction matrix")
        object.__setattr__(self, "x2", x2)

    @property
    def parameter(self):
        return self.x2

    @property
    def scale(self):
        """The factor c = (2 + x2)/(2 - x2) multiplying psi (psi' gets 1/c)."""
        return (2.0 + self.x2) / (2.0 - self.x2)

    def matrix(self):
        c = self.scale
        return np.array([[c, 0.0], [0.0, 1.0 / c]], dtype=complex)


@dataclass(frozen=True)
class Chart:
    """General chart ``z [[1, 1/((y-x)|z|^2)], [x, y/((y-x)|z|^2)]]``.

    ``y = inf`` selects the limit form ``z [[1, 0], [x, 1/|z|^2]]``, which
    covers rows I, III and IV.
    """

    x: float
    y: float
    z: complex

    def __post_init__(self):
        x = _real(self.x, "x")
        y = float(self.y)
        if math.isnan(y) or y == -math.inf:
            raise InvalidParameter("y must be real or +inf")
        z = complex(self.z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise InvalidParameter("z must be finite")
        if z == 0:
            raise InvalidParameter("z must be nonzero")
        if x == y:
            raise InvalidParameter("chart requires x != y")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    def matrix(self):
        x, y, z = self.x, self.y, self.z
        n2 = abs(z) ** 2
        if math.isinf(y):
            return z * np.array([[1.0, 0.0], [x, 1.0 / n2]], dtype=complex)
        d = (y - x) * n2
        return z * np.array([[1.0, 1.0 / d], [x, y / d]], dtype=complex)


@dataclass(frozen=True, eq=False)
class Raw:
    m: JunctionMatrix

    def __post_init__(self):
        if not isinstance(self.m, JunctionMatrix):
            object.__setattr__(self, "m", JunctionMatrix(self.m))

    def matrix(self):
        return self.m.array.copy()


CANONICAL_FAMILIES = (DeltaPotential, DeltaPrime, MagneticFlux, DeltaOne)


def junction_of(family, tol=None):
    """Lower an extension family to its validated junction matrix.

    ``tol`` defaults to 1e-12 scaled by the squared largest entry, since large
    parameters (x's of order 50, |z| up to 10) cost that many ulps.
    """
    if isinstance(family, Raw):
        return family.m
    a = family.matrix()
    if tol is None:
        tol = 1e-12 * max(1.0, float(np.max(np.abs(a))) ** 2)
    return JunctionMatrix(a, tol=tol)


def flux_of_x3(x3):
    """Flux alpha in [0, 1) with exp(2 pi i alpha) = (2 + i x3)/(2 - i x3)."""
    x3 = _real(x3, "x3")
    w = (2.0 + 1j * x3) / (2.0 - 1j * x3)
    alpha = (math.atan2(w.imag, w.real) / (2.0 * math.pi)) % 1.0
    return 0.0 if alpha >= 1.0 else alpha


_GENERATORS = {
    DeltaPotential: np.array([[0, 0], [1, 0]], dtype=complex),
    DeltaPrime: np.array([[0, -1], [0, 0]], dtype=complex),
    MagneticFlux: 2j * np.pi * np.eye(2, dtype=complex),
    DeltaOne: np.diag([1.0, -1.0]).astype(complex),
}


def _family_type(family):
    t = family if isinstance(family, type) else type(family)
    if t not in _GENERATORS:
        raise InvalidParameter(f"no generator for {t.__name__}; canonical families only")
    return t


def generator(family):
    """Tangent ``dM/dparameter`` at the identity of a canonical family."""
    return _GENERATORS[_family_type(family)].copy()


def finite_difference_generator(family, h=1e-6):
    """Central-difference estimate of :func:`generator`, used as a cross-check."""
    t = _family_type(family)
    return (t(h).matrix() - t(-h).matrix()) / (2.0 * h)


def generator_gram():
    """Gram matrix ``Tr(g_i g_j^dag)`` of the four canonical generators (order I-IV)."""
    gens = [_GENERATORS[t] for t in CANONICAL_FAMILIES]
    g = np.array([[np.trace(a @ b.conj().T) for b in gens] for a in gens])
    return g.real


def family_sum(f1, f2):
    """Parameter addition inside one of the additive families I, II, III."""
    if type(f1) is not type(f2) or type(f1) not in (DeltaPotential, DeltaPrime, MagneticFlux):
        raise InvalidParameter("parameter addition is a group law only for families I, II, III")
    if isinstance(f1, MagneticFlux):
        return MagneticFlux(f1.alpha + f2.alpha, quanta=f1.quanta + f2.quanta)
    return type(f1)(f1.parameter + f2.parameter)


def compose_families(f1, f2):
    return compose(junction_of(f1), junction_of(f2))


def lower(m):
    """Accept a family or a matrix and return a JunctionMatrix."""
    if isinstance(m, JunctionMatrix):
        return m
    if hasattr(m, "matrix"):
        return junction_of(m)
    return JunctionMatrix(as_matrix(m))
