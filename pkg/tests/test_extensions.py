import math

import numpy as np
import pytest

from pointlike.core import InvalidParameter, JunctionMatrix, compose, validate_symplectic
from pointlike.extensions import (
    CANONICAL_FAMILIES,
    Chart,
    DeltaOne,
    DeltaPotential,
    DeltaPrime,
    ExtensionClass,
    MagneticFlux,
    Raw,
    family_sum,
    finite_difference_generator,
    flux_of_x3,
    generator,
    generator_gram,
    junction_of,
)


def test_zero_delta_is_identity():
    np.testing.assert_array_equal(junction_of(DeltaPotential(0)).array, np.eye(2))


@pytest.mark.parametrize("n", [-3, -1, 0, 1, 2, 7])
def test_integer_flux_is_identity(n):
    f = MagneticFlux(n)
    assert f.alpha == 0.0
    assert f.quanta == n
    np.testing.assert_allclose(junction_of(f).array, np.eye(2), atol=1e-15)


def test_flux_keeps_integer_part():
    f = MagneticFlux(2.25)
    assert f.alpha == pytest.approx(0.25)
    assert f.quanta == 2
    assert f.flux == pytest.approx(2.25)
    np.testing.assert_allclose(junction_of(f).array, 1j * np.eye(2), atol=1e-15)
    g = MagneticFlux(-0.25)
    assert g.alpha == pytest.approx(0.75) and g.quanta == -1


def test_delta_one_value():
    np.testing.assert_allclose(junction_of(DeltaOne(1)).array, np.diag([3, 1 / 3]))


@pytest.mark.parametrize(
    "family, expected",
    [
        (DeltaPotential(2.5), [[1, 0], [2.5, 1]]),
        (DeltaPrime(1.5), [[1, -1.5], [0, 1]]),
        (MagneticFlux(0.125), np.exp(0.25j * np.pi) * np.eye(2)),
        (DeltaOne(-1), [[1 / 3, 0], [0, 3]]),
    ],
)
def test_table_matrices(family, expected):
    np.testing.assert_allclose(junction_of(family).array, expected, atol=1e-15)


@pytest.mark.parametrize("x2", [2.0, -2.0])
def test_delta_one_rejects_decoupled(x2):
    with pytest.raises(InvalidParameter):
        DeltaOne(x2)


@pytest.mark.parametrize("args", [(1.0, 1.0, 1.0), (0.0, 2.0, 0.0), (0.0, math.nan, 1.0)])
def test_chart_rejects_degenerate(args):
    with pytest.raises(InvalidParameter):
        Chart(*args)


def test_labels_follow_table():
    assert [f.label for f in CANONICAL_FAMILIES] == [
        ExtensionClass.PURE_POTENTIAL,
        ExtensionClass.MASS_JUMP,
        ExtensionClass.MAGNETIC,
        ExtensionClass.MAGNETIC_MASS_JUMP,
    ]
    assert [f.group for f in CANONICAL_FAMILIES] == ["(1,0)", "R+", "U(1)", "R+ x Z"]


def _draw(family, rng):
    if family is MagneticFlux:
        return MagneticFlux(rng.uniform(0, 1))
    x = rng.uniform(-50, 50)
    while family is DeltaOne and abs(abs(x) - 2) < 1e-9:
        x = rng.uniform(-50, 50)
    return family(x)


@pytest.mark.parametrize("family", CANONICAL_FAMILIES)
def test_constructors_symplectic_random(family, rng):
    for _ in range(1000):
        junction_of(_draw(family, rng))


def test_chart_symplectic_random(rng):
    for _ in range(1000):
        x, y = rng.uniform(-10, 10, size=2)
        r = rng.uniform(0.1, 10)
        z = r * np.exp(1j * rng.uniform(0, 2 * np.pi))
        m = Chart(x, y, z).matrix()
        # chart entries scale like |z| / |y - x|, so does rounding in M^dag Sp2 M
        tol = 1e-12 * max(1.0, np.abs(m).max() ** 2)
        validate_symplectic(m, tol=tol)


@pytest.mark.parametrize(
    "chart, family",
    [
        (Chart(2.0, math.inf, 1.0), DeltaPotential(2.0)),
        (Chart(0.0, -1 / 3.0, 1.0), DeltaPrime(3.0)),
        (Chart(0.0, math.inf, np.exp(2j * np.pi * 0.3)), MagneticFlux(0.3)),
        (Chart(0.0, math.inf, 3.0), DeltaOne(1.0)),
    ],
)
def test_chart_covers_table_rows(chart, family):
    np.testing.assert_allclose(junction_of(chart).array, junction_of(family).array, atol=1e-14)


def test_chart_limit_matches_large_y():
    finite = Chart(0.7, 1e9, 1.3 - 0.4j).matrix()
    limit = Chart(0.7, math.inf, 1.3 - 0.4j).matrix()
    np.testing.assert_allclose(finite, limit, atol=1e-8)


def test_raw_passthrough():
    m = validate_symplectic([[1, 0], [4, 1]])
    assert junction_of(Raw(m)) is m


def test_flux_of_x3_values():
    assert flux_of_x3(0) == 0.0
    assert flux_of_x3(2) == pytest.approx(0.25)
    # (2 - 2i)/(2 + 2i) = -i
    assert flux_of_x3(-2) == pytest.approx(0.75)


@pytest.mark.parametrize("x3", [0.1, 0.5, 1.0, 3.0, 17.0, 400.0])
def test_flux_of_x3_time_reversal(x3):
    d = (flux_of_x3(x3) + flux_of_x3(-x3)) % 1.0
    assert min(d, 1 - d) < 1e-12


def test_flux_of_x3_reproduces_moebius(rng):
    for x3 in rng.uniform(-100, 100, size=200):
        m = junction_of(MagneticFlux(flux_of_x3(x3))).array
        w = (2 + 1j * x3) / (2 - 1j * x3)
        assert 0 <= flux_of_x3(x3) < 1
        np.testing.assert_allclose(m, w * np.eye(2), rtol=0, atol=1e-12)


@pytest.mark.parametrize(
    "family, expected",
    [
        (DeltaPotential, [[0, 0], [1, 0]]),
        (DeltaPrime, [[0, -1], [0, 0]]),
        (MagneticFlux, 2j * np.pi * np.eye(2)),
        (DeltaOne, [[1, 0], [0, -1]]),
    ],
)
def test_generators(family, expected):
    np.testing.assert_array_equal(generator(family), expected)
    fd = finite_difference_generator(family, h=1e-6)
    g = generator(family)
    assert np.abs(fd - g).max() <= 1e-6 * np.abs(g).max()


def test_generator_rejects_chart():
    with pytest.raises(InvalidParameter):
        generator(Chart)


def test_gram_entries():
    g = generator_gram()
    assert g.shape == (4, 4)
    off = g - np.diag(np.diag(g))
    assert np.abs(off).max() <= 1e-12
    np.testing.assert_allclose(np.diag(g), [1, 1, 8 * np.pi**2, 2])
    # independent: Tr(A B^dag) as the Frobenius inner product of flattened matrices
    gens = [generator(f) for f in CANONICAL_FAMILIES]
    frob = np.array([[np.vdot(b.ravel(), a.ravel()) for b in gens] for a in gens])
    np.testing.assert_allclose(g, frob.real, atol=1e-14)


def test_delta_additive():
    m = compose(junction_of(DeltaPotential(1.5)), junction_of(DeltaPotential(-0.5)))
    assert m.allclose(junction_of(DeltaPotential(1.0)))


def test_delta_prime_additive():
    m = compose(junction_of(DeltaPrime(2.0)), junction_of(DeltaPrime(0.75)))
    assert m.allclose(junction_of(DeltaPrime(2.75)))


def test_flux_additive_mod_one():
    m = compose(junction_of(MagneticFlux(0.3)), junction_of(MagneticFlux(0.9)))
    s = family_sum(MagneticFlux(0.3), MagneticFlux(0.9))
    assert s.alpha == pytest.approx(0.2) and s.quanta == 1
    assert m.allclose(junction_of(MagneticFlux(0.2)))


def test_delta_one_not_additive():
    m = compose(junction_of(DeltaOne(0.5)), junction_of(DeltaOne(0.5))).array
    single = junction_of(DeltaOne(1.0)).array
    assert m[0, 0].real == pytest.approx(25 / 9)
    assert single[0, 0].real == pytest.approx(3.0)
    assert abs(m[0, 0] - single[0, 0]) >= 0.1


def test_delta_one_multiplicative_in_scale():
    a, b = DeltaOne(0.5), DeltaOne(-1.3)
    m = compose(junction_of(a), junction_of(b)).array
    c = a.scale * b.scale
    np.testing.assert_allclose(m, np.diag([c, 1 / c]))


def test_family_sum_rejects_delta_one():
    with pytest.raises(InvalidParameter):
        family_sum(DeltaOne(0.1), DeltaOne(0.2))


def test_group_closure_random(rng):
    fams = [DeltaPotential, DeltaPrime, MagneticFlux, DeltaOne]
    for _ in range(200):
        f1 = fams[rng.integers(4)](rng.uniform(-1.5, 1.5))
        f2 = fams[rng.integers(4)](rng.uniform(-1.5, 1.5))
        assert isinstance(compose(junction_of(f1), junction_of(f2)), JunctionMatrix)
