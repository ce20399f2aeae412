import math

import mpmath as mp
import numpy as np
import pytest

from pointlike.core import validate_symplectic
from pointlike.extensions import DeltaOne, junction_of
from pointlike.massjump import (
    InvalidMu,
    b_of_mu,
    correspondence,
    extract_x2,
    massjump_junction,
    rescale_junction,
    rescaled_massjump,
    x2_of_mu,
)


def x2_reference(mu, dps=60):
    """Closed form evaluated in 60-digit arithmetic."""
    with mp.workdps(dps):
        mu = mp.mpf(mu)
        s = mp.sqrt(mu**2 + mu + 1)
        q = mu ** mp.mpf("0.25")
        return float(2 * (1 + mu * q - q * s + s) / (1 - mu * q + q * s + s))


def log_uniform_mus(n=200, seed=7):
    rng = np.random.default_rng(seed)
    mus = 10 ** rng.uniform(-3, 3, size=n)
    return [m for m in mus if m != 1.0]


def test_b_values():
    assert b_of_mu(3) == pytest.approx(1 / math.sqrt(13))
    assert b_of_mu(3) == pytest.approx(0.277350, abs=5e-7)
    assert b_of_mu(1e-12) == pytest.approx(1.0)


@pytest.mark.parametrize("mu", [0.0, -1.0, 1.0, math.nan, math.inf])
def test_invalid_mu(mu):
    with pytest.raises(InvalidMu):
        b_of_mu(mu)
    with pytest.raises(InvalidMu):
        x2_of_mu(mu)


def test_mu_one_message_mentions_free_parameter():
    with pytest.raises(InvalidMu, match="free"):
        massjump_junction(1.0)


def test_massjump_junction_mu3():
    b = 1 / math.sqrt(13)
    expected = np.diag([(1 + b) / (1 - 3 * b), (1 - b) / (1 + 3 * b)])
    np.testing.assert_allclose(massjump_junction(3), expected, rtol=1e-14)
    assert np.linalg.det(massjump_junction(3)).real / 3 == pytest.approx(1.0)


@pytest.mark.parametrize("mu", [1e-3, 0.2, 0.9, 1.1, 3.0, 50.0, 1e3])
def test_determinant_is_mu(mu):
    assert np.linalg.det(massjump_junction(mu)).real == pytest.approx(mu, rel=1e-12)


def test_rescale_identity():
    m = np.array([[1, 2], [3, 7]], dtype=complex)
    np.testing.assert_array_equal(rescale_junction(m, 1.0), m)


def test_rescaled_unit_determinant_and_symplectic():
    r = rescale_junction(massjump_junction(3), 1 / math.sqrt(3))
    assert r[0, 1] == 0 and r[1, 0] == 0
    assert (r[0, 0] * r[1, 1]).real == pytest.approx(1.0)
    validate_symplectic(r)


def test_x2_closed_form_matches_high_precision():
    for mu in log_uniform_mus() + [1e-12, 1e-6, 1e6, 1e12, 1e100, 1e200]:
        assert x2_of_mu(mu) == pytest.approx(x2_reference(mu), rel=1e-13, abs=1e-15)


def test_x2_pipeline_round_trip():
    for mu in log_uniform_mus():
        e11, e22 = extract_x2(mu)
        assert abs(x2_of_mu(mu) - e11) <= 1e-10
        assert abs(e11 - e22) <= 1e-10


def test_mu3_pipeline():
    assert abs(x2_of_mu(3) - extract_x2(3)[0]) <= 1e-10


def test_delta_one_correspondence():
    for mu in log_uniform_mus():
        target = junction_of(DeltaOne(x2_of_mu(mu))).array
        np.testing.assert_allclose(rescaled_massjump(mu).array, target, rtol=0, atol=1e-10)


def test_x2_strictly_inside():
    for mu in log_uniform_mus():
        assert abs(x2_of_mu(mu)) < 2


def test_limits_approach_two():
    assert abs(x2_of_mu(1e6) - 2) <= 1e-3
    assert abs(x2_of_mu(1e12) - 2) <= 1e-8
    # the small-mu approach is slow: 2 - X2 ~ 2 mu^(1/4)
    for mu in (1e-8, 1e-12, 1e-16, 1e-20):
        assert (2 - x2_of_mu(mu)) / (2 * mu**0.25) == pytest.approx(1.0, rel=0.05)
    assert x2_of_mu(1e-300) == pytest.approx(2.0, abs=1e-70)


def test_no_overflow_extreme():
    for mu in (1e150, 1e300, 1e-300):
        assert math.isfinite(x2_of_mu(mu))


def test_correspondence_dict():
    c = correspondence(3)
    assert c["b"] == pytest.approx(0.277350, abs=5e-7)
    assert c["delta_one_match_residual"] <= 1e-10
    assert c["lambda"] == pytest.approx(1 / math.sqrt(3))
