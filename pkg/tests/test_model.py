import math

import numpy as np
import pytest
from scipy import stats

from nonhomnet.errors import InvalidParameter, ZeroRadiusNode
from nonhomnet.model import (
    GeneralScaledPowers,
    NetworkGeometry,
    NodeSet,
    PowerLawIntensity,
    PowerLawScaledPowers,
    count_for_radius,
    empirical_scaled_powers,
    radius_for_count,
    sample_nodes,
    scaled_power_cdf,
)
from nonhomnet.streams import PURPOSE_DIAGNOSTIC, derive_stream

EPSILONS = [-1.0, -0.75, -0.5, -0.25, 0.0]


class _UnitUniform:
    """Stub generator whose uniform draws are all zero, forcing U = 1."""

    def random(self, n):
        return np.zeros(n)


def test_radius_closed_form_uniform():
    # epsilon = 0 reduces to R = sqrt(n / (pi rho))
    r = radius_for_count(PowerLawIntensity(rho=0.01, epsilon=0.0), 10_000)
    assert r == pytest.approx(math.sqrt(10_000 / (math.pi * 0.01)), rel=1e-12)


def test_radius_closed_form_dense_cluster():
    # epsilon = -1 reduces to R = n / (2 pi rho)
    r = radius_for_count(PowerLawIntensity(rho=0.01, epsilon=-1.0), 10_000)
    assert r == pytest.approx(10_000 / (2 * math.pi * 0.01), rel=1e-12)


def test_radius_identity_case():
    rho, eps = 0.37, -0.3
    n = 2 * math.pi * rho / (2 + eps)
    assert radius_for_count(PowerLawIntensity(rho, eps), n) == pytest.approx(1.0, rel=1e-12)


def test_count_examples():
    assert count_for_radius(PowerLawIntensity(0.01, 0.0), 0.0) == 0.0
    assert count_for_radius(PowerLawIntensity(1.0, 0.0), 1.0) == pytest.approx(math.pi, rel=1e-14)


@pytest.mark.parametrize("rho", [0.001, 0.01, 1.0, 10.0])
@pytest.mark.parametrize("epsilon", EPSILONS)
@pytest.mark.parametrize("n", [1, 10, 10**4, 10**8])
def test_count_radius_roundtrip(rho, epsilon, n):
    intensity = PowerLawIntensity(rho, epsilon)
    back = count_for_radius(intensity, radius_for_count(intensity, n))
    assert back == pytest.approx(n, rel=1e-12)


def test_intensity_validation():
    with pytest.raises(InvalidParameter):
        PowerLawIntensity(rho=0.0, epsilon=0.0)
    with pytest.raises(InvalidParameter):
        PowerLawIntensity(rho=1.0, epsilon=-2.0)


def test_geometry_from_radius_rounds_count():
    geom = NetworkGeometry.from_radius(PowerLawIntensity(1.0, 0.0), 10.0)
    assert geom.n_nodes == round(math.pi * 100)
    assert geom.radius == 10.0


@pytest.mark.parametrize("epsilon", EPSILONS)
def test_radial_sampling_ks(epsilon):
    geom = NetworkGeometry.from_count(PowerLawIntensity(0.01, epsilon), 100_000)
    rng = derive_stream(123, PURPOSE_DIAGNOSTIC, 0)
    nodes = sample_nodes(geom, rng)
    scaled = nodes.radii / geom.radius
    result = stats.kstest(scaled, lambda t: t ** (2.0 + epsilon))
    assert result.pvalue > 0.01


def test_sampling_deterministic():
    geom = NetworkGeometry.from_count(PowerLawIntensity(0.01, -0.5), 1000)
    a = sample_nodes(geom, derive_stream(9, PURPOSE_DIAGNOSTIC, 1))
    b = sample_nodes(geom, derive_stream(9, PURPOSE_DIAGNOSTIC, 1))
    assert np.array_equal(a.radii, b.radii)
    assert np.array_equal(a.angles, b.angles)


def test_sampling_boundary_u_equal_one():
    geom = NetworkGeometry.from_count(PowerLawIntensity(0.01, -0.5), 10)
    nodes = sample_nodes(geom, _UnitUniform())
    assert np.all(nodes.radii == geom.radius)
    assert np.all(nodes.angles == 2 * math.pi)


def test_sampling_ranges():
    geom = NetworkGeometry.from_count(PowerLawIntensity(0.01, 0.0), 10_000)
    nodes = sample_nodes(geom, derive_stream(5, PURPOSE_DIAGNOSTIC, 2))
    assert np.all(nodes.radii > 0) and np.all(nodes.radii <= geom.radius)
    assert np.all(nodes.angles > 0) and np.all(nodes.angles <= 2 * math.pi)


def test_scaled_power_cdf_values():
    dist = PowerLawScaledPowers(alpha=4.0, epsilon=0.0)
    assert scaled_power_cdf(dist, 1.0) == 0.0
    assert scaled_power_cdf(dist, 0.5) == 0.0
    assert scaled_power_cdf(dist, 16.0) == pytest.approx(0.75, rel=1e-14)
    assert scaled_power_cdf(PowerLawScaledPowers(3.0, -1.0), 1e12) == pytest.approx(1.0, abs=1e-3)


@pytest.mark.parametrize("alpha,epsilon", [(4.0, 0.0), (3.0, -0.5), (2.5, -1.0)])
def test_scaled_power_cdf_shape(alpha, epsilon):
    dist = PowerLawScaledPowers(alpha, epsilon)
    grid = np.logspace(-1, 8, 300)
    values = [scaled_power_cdf(dist, x) for x in grid]
    assert all(lo <= hi for lo, hi in zip(values, values[1:]))
    assert scaled_power_cdf(dist, 10.0 ** (6 * alpha / (2 + epsilon))) >= 1 - 1e-6


def test_general_distribution_density_normalized():
    alpha, epsilon = 3.5, -0.25
    dist = GeneralScaledPowers(
        cdf_fn=lambda x: 1 - x ** (-(2 + epsilon) / alpha),
        density_fn=lambda x: (2 + epsilon) / alpha * x ** (-(2 + epsilon + alpha) / alpha),
    )
    from scipy.integrate import quad
    total, _ = quad(dist.density, 1.0, np.inf)
    assert total == pytest.approx(1.0, abs=1e-8)
    assert scaled_power_cdf(dist, 0.5) == 0.0


def test_empirical_scaled_powers_values():
    nodes = NodeSet(radii=np.array([2.0, 1.0]), angles=np.array([1.0, 2.0]))
    powers = empirical_scaled_powers(nodes, radius=2.0, alpha=4.0)
    assert powers[0] == pytest.approx(1.0)
    assert powers[1] == pytest.approx(16.0)
    assert np.all(powers >= 1.0)


def test_empirical_scaled_powers_zero_radius():
    nodes = NodeSet(radii=np.array([0.0, 1.0]), angles=np.array([1.0, 2.0]))
    with pytest.raises(ZeroRadiusNode):
        empirical_scaled_powers(nodes, radius=2.0, alpha=3.0)


def test_empirical_scaled_powers_match_limit_law():
    alpha, epsilon = 3.0, -0.5
    geom = NetworkGeometry.from_count(PowerLawIntensity(0.01, epsilon), 100_000)
    nodes = sample_nodes(geom, derive_stream(77, PURPOSE_DIAGNOSTIC, 3))
    powers = empirical_scaled_powers(nodes, geom.radius, alpha)
    dist = PowerLawScaledPowers(alpha, epsilon)
    result = stats.kstest(powers, lambda x: np.array([dist.cdf(v) for v in np.atleast_1d(x)]))
    assert result.pvalue > 0.01
