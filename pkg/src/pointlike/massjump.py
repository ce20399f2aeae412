"""Mass-jump junctions and their correspondence with the delta^(1) family.

A mass ratio ``mu = m+/m-`` (``m- = 1``) across the origin admits the junction
``diag((1+b)/(1-mu b), (1-b)/(1+mu b))`` with ``b = 1/sqrt(1+mu+mu^2)``.
Rescaling ``x -> x/sqrt(mu)`` on the right half-line turns it into a constant
mass problem whose junction is ``DeltaOne(x2)`` for the x2 of :func:`x2_of_mu`.
"""
from __future__ import annotations

import math

import numpy as np

from .core import InvalidParameter, JunctionMatrix, as_matrix
from .extensions import DeltaOne, junction_of


class InvalidMu(InvalidParameter):
    pass


def _check_mu(mu):
    mu = float(mu)
    if not math.isfinite(mu) or mu <= 0:
        raise InvalidMu(f"mass ratio mu must be positive and finite, got {mu!r}")
    if mu == 1.0:
        raise InvalidMu(
            "mu = 1 (no mass jump): b is then a free extension parameter, b = X2/2; "
            "use DeltaOne directly"
        )
    return mu


def _root(mu):
    # sqrt(1 + mu + mu^2) without overflowing for huge mu
    if mu > 1.0:
        return mu * math.sqrt(1.0 + 1.0 / mu + 1.0 / (mu * mu))
    return math.sqrt(1.0 + mu + mu * mu)


def b_of_mu(mu):
    return 1.0 / _root(_check_mu(mu))


def scale_of_mu(mu):
    """Half-line rescaling factor lambda = 1/sqrt(mu)."""
    return 1.0 / math.sqrt(_check_mu(mu))


def massjump_junction(mu):
    """Junction of the mass-jump Hamiltonian, as a plain 2x2 array.

    Its determinant is ``mu``, not 1: it conserves the current of a
    ``-(1/mu) d^2/dx^2`` half-line, so it only becomes a JunctionMatrix after
    rescaling (see :func:`rescaled_massjump`).
    """
    mu = _check_mu(mu)
    s = _root(mu)
    # (1+b)/(1-mu b) = (s+1)/(s-mu) and (1-b)/(1+mu b) = (s-1)/(s+mu), b = 1/s;
    # s-1 and s-mu are formed without cancellation
    s_minus_1 = mu * (1.0 + mu) / (s + 1.0)
    s_minus_mu = (1.0 + mu) / (s + mu)
    return np.diag([(s + 1.0) / s_minus_mu, s_minus_1 / (s + mu)]).astype(complex)


def rescale_junction(m, lam):
    """Left-multiply by ``diag(lam^(1/2), lam^(3/2))`` (right half-line rescaled)."""
    lam = float(lam)
    if not (lam > 0 and math.isfinite(lam)):
        raise InvalidParameter("lambda must be positive and finite")
    w = np.diag([math.sqrt(lam), lam ** 1.5])
    return w @ as_matrix(m)


def rescaled_massjump(mu):
    """The mass-jump junction mapped to the constant-mass line, validated."""
    return JunctionMatrix(rescale_junction(massjump_junction(mu), scale_of_mu(mu)))


def x2_of_mu(mu):
    """Closed-form delta^(1) strength equivalent to the mass ratio ``mu``.

    Numerator and denominator are divided by their dominant power of mu so the
    expression stays finite for extreme ratios.
    """
    mu = _check_mu(mu)
    q = mu ** 0.25
    if mu <= 1.0:
        s = _root(mu)
        num = 1 + mu * q - q * s + s
        den = 1 - mu * q + q * s + s
    else:
        # divide through by mu^(5/4); sr = s/mu = 1 + d with d ~ 1/(2 mu)
        t = 1.0 / mu + 1.0 / (mu * mu)
        d = t / (math.sqrt(1.0 + t) + 1.0)
        sr = 1.0 + d
        inv = 1.0 / (mu * q)
        num = inv - d + sr / q
        den = inv + d + sr / q
    return 2.0 * num / den


def x2_from_scale(g):
    """Invert ``g = (2 + x2)/(2 - x2)``."""
    return 2.0 * (g - 1.0) / (g + 1.0)


def extract_x2(mu):
    """X2 read off the rescaled mass-jump junction, via the (1,1) and (2,2) entries.

    The two readings are returned separately so sign or weight errors in the
    rescaling show up as a disagreement.
    """
    r = rescaled_massjump(mu).array
    g11 = r[0, 0].real
    g22 = r[1, 1].real
    return x2_from_scale(g11), x2_from_scale(1.0 / g22)


def correspondence(mu):
    """All intermediate quantities of the mu -> X2 correspondence, as a dict."""
    mu = _check_mu(mu)
    x2 = x2_of_mu(mu)
    rescaled = rescaled_massjump(mu)
    target = junction_of(DeltaOne(x2))
    return {
        "mu": mu,
        "b": b_of_mu(mu),
        "lambda": scale_of_mu(mu),
        "X2": x2,
        "M_massjump": massjump_junction(mu),
        "M_rescaled": rescaled.array,
        "delta_one_match_residual": float(np.max(np.abs(rescaled.array - target.array))),
    }
