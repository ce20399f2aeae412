"""2x2 complex junction algebra: boundary vectors, the symplectic form and the
probability current.

Units are hbar = m = 1 throughout. A junction matrix ``M`` maps the boundary
vector ``(psi, psi')`` just left of the origin to the one just right of it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SP2 = np.array([[0.0, 1.0], [-1.0, 0.0]])
SP2.setflags(write=False)

SYMPLECTIC_TOL = 1e-12


class PointlikeError(Exception):
    """Base class for domain errors raised by this package."""


class InvalidParameter(PointlikeError, ValueError):
    pass


class NotSymplectic(PointlikeError):
    """Raised when ``M^dag Sp2 M != Sp2``: the matrix defines no self-adjoint extension."""

    def __init__(self, residual, entry):
        self.residual = float(residual)
        self.entry = tuple(int(i) for i in entry)
        super().__init__(
            f"matrix is not symplectic-unitary: residual {self.residual:.3g} "
            f"at entry {self.entry} of M^dag Sp2 M - Sp2"
        )


def _finite_complex(value, name):
    z = complex(value)
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise InvalidParameter(f"{name} must be finite, got {value!r}")
    return z


@dataclass(frozen=True)
class BoundaryData:
    """Value and first derivative of a wave function at one side of the origin."""

    psi: complex
    dpsi: complex

    def __post_init__(self):
        object.__setattr__(self, "psi", _finite_complex(self.psi, "psi"))
        object.__setattr__(self, "dpsi", _finite_complex(self.dpsi, "dpsi"))

    @classmethod
    def from_vector(cls, v):
        v = np.asarray(v, dtype=complex).reshape(2)
        return cls(v[0], v[1])

    def as_vector(self):
        return np.array([self.psi, self.dpsi], dtype=complex)

    def norm2(self):
        return abs(self.psi) ** 2 + abs(self.dpsi) ** 2


def as_matrix(m):
    """Return ``m`` as a finite 2x2 complex ndarray (accepts JunctionMatrix)."""
    if isinstance(m, JunctionMatrix):
        return m.array
    a = np.array(m, dtype=complex)
    if a.shape != (2, 2):
        raise InvalidParameter(f"expected a 2x2 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidParameter("matrix entries must be finite")
    return a


def symplectic_residual(m):
    """Max-entry norm of ``M^dag Sp2 M - Sp2`` and the offending entry."""
    a = as_matrix(m)
    r = np.abs(a.conj().T @ SP2 @ a - SP2)
    idx = np.unravel_index(np.argmax(r), r.shape)
    return float(r[idx]), idx


class JunctionMatrix:
    """Validated symplectic-unitary 2x2 matrix.

    Instances are immutable; construct them through :func:`validate_symplectic`
    (or the constructors in :mod:`pointlike.extensions`).
    """

    __slots__ = ("_a", "residual")

    def __init__(self, m, tol=SYMPLECTIC_TOL):
        a = as_matrix(m).copy()
        if not tol > 0:
            raise InvalidParameter("tol must be positive")
        residual, idx = symplectic_residual(a)
        if residual > tol:
            raise NotSymplectic(residual, idx)
        a.setflags(write=False)
        self._a = a
        self.residual = residual

    @property
    def array(self):
        return self._a

    m11 = property(lambda self: complex(self._a[0, 0]))
    m12 = property(lambda self: complex(self._a[0, 1]))
    m21 = property(lambda self: complex(self._a[1, 0]))
    m22 = property(lambda self: complex(self._a[1, 1]))

    def det(self):
        return complex(np.linalg.det(self._a))

    def __array__(self, dtype=None, copy=None):
        return self._a.astype(dtype) if dtype is not None else self._a.copy()

    def __matmul__(self, other):
        if isinstance(other, JunctionMatrix):
            return compose(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, JunctionMatrix):
            return NotImplemented
        return np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash(self._a.tobytes())

    def allclose(self, other, atol=1e-12):
        return bool(np.allclose(self._a, as_matrix(other), rtol=0, atol=atol))

    def __repr__(self):
        return f"JunctionMatrix({np.array2string(self._a, precision=6, separator=', ')})"


def validate_symplectic(m, tol=SYMPLECTIC_TOL):
    """Check ``M^dag Sp2 M = Sp2`` to ``tol`` and wrap ``m`` as a JunctionMatrix.

    Raises NotSymplectic carrying the residual when the check fails.
    """
    return JunctionMatrix(m, tol=tol)


def compose(m1, m2, tol=None):
    """Matrix product ``m1 @ m2``: pass through ``m2`` first, then ``m1``."""
    a = as_matrix(m1) @ as_matrix(m2)
    if tol is None:
        # products of large-parameter matrices lose precision proportionally
        scale = max(1.0, np.max(np.abs(a)) ** 2)
        tol = SYMPLECTIC_TOL * scale
    return JunctionMatrix(a, tol=tol)


def current(g):
    """Probability current ``(1/2i) Gamma^dag Sp2 Gamma = Im(conj(psi) psi')``."""
    if not isinstance(g, BoundaryData):
        g = BoundaryData.from_vector(g)
    return (np.conj(g.psi) * g.dpsi).imag


def apply_junction(m, g_left):
    """Boundary data on the right of the origin, ``Gamma(0+) = M Gamma(0-)``."""
    if not isinstance(g_left, BoundaryData):
        g_left = BoundaryData.from_vector(g_left)
    return BoundaryData.from_vector(as_matrix(m) @ g_left.as_vector())
