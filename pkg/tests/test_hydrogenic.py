import math

import numpy as np
import pytest

from radial_uncertainty import constants, hydrogenic
from radial_uncertainty.hydrogenic import HydrogenicSpec
from radial_uncertainty.observables import InvalidStateError
from radial_uncertainty.quadrature import integrate_semi_infinite, locate_maximum


@pytest.mark.parametrize("Z,n,ell", [(1, 0, 0), (1, 2, 2), (1, 2, -1), (0, 1, 0), (1, 1.5, 0)])
def test_invalid_states(Z, n, ell):
    with pytest.raises(InvalidStateError):
        HydrogenicSpec(Z, n, ell)


def test_orbital_labels():
    assert [s.orbital for s in hydrogenic.states(3)] == ["1s", "2s", "2p", "3s", "3p", "3d"]


def test_ground_state_wavefunction():
    spec = HydrogenicSpec(1, 1, 0)
    assert hydrogenic.normalization_constant(spec) == pytest.approx(2.0)
    r = np.linspace(0.0, 5.0, 11)
    assert np.allclose(hydrogenic.radial_wavefunction(spec, r), 2 * np.exp(-r))


@pytest.mark.parametrize("spec", hydrogenic.states(6) + hydrogenic.states(4, Z=3))
def test_normalization(spec):
    val = integrate_semi_infinite(lambda r: r * r * hydrogenic.radial_wavefunction(spec, r) ** 2,
                                  rel_tol=1e-12, scale=spec.n**2 / spec.Z).value
    assert val == pytest.approx(1.0, rel=1e-10)


def test_derivative_matches_difference():
    spec = HydrogenicSpec(2, 4, 2)
    for r in (0.3, 1.1, 4.0, 9.0):
        h = 1e-5
        fd = (hydrogenic.radial_wavefunction(spec, r + h) - hydrogenic.radial_wavefunction(spec, r - h)) / (2 * h)
        assert hydrogenic.radial_derivative(spec, r) == pytest.approx(fd, rel=1e-6, abs=1e-10)


def test_closed_forms_examples():
    obs = hydrogenic.observables(HydrogenicSpec(1, 3, 2))
    assert obs.mean_r == 10.5
    assert obs.delta_r == pytest.approx(3.9686, abs=1e-4)
    assert obs.sigma_r == pytest.approx(0.3780, abs=1e-4)
    assert obs.product == pytest.approx(0.5916, abs=1e-4)
    assert obs.mean_pr == 0.0
    ground = hydrogenic.observables(HydrogenicSpec(1, 1, 0))
    assert ground.delta_r == pytest.approx(math.sqrt(3) / 2)
    assert ground.delta_pr == 1.0


def test_sigma_equal_for_3d_and_4d():
    a = hydrogenic.observables(HydrogenicSpec(1, 3, 2)).sigma_r
    b = hydrogenic.observables(HydrogenicSpec(1, 4, 2)).sigma_r
    assert a == pytest.approx(b, rel=1e-14)
    assert a == pytest.approx(math.sqrt(3 / 21), rel=1e-14)


def test_observables_independent_of_Z():
    for n, ell in ((3, 1), (5, 4)):
        a = hydrogenic.observables(HydrogenicSpec(1, n, ell))
        b = hydrogenic.observables(HydrogenicSpec(4, n, ell))
        assert a == b


@pytest.mark.parametrize("n", range(1, 8))
def test_stretched_state_product(n):
    obs = hydrogenic.observables(HydrogenicSpec(1, n, n - 1))
    assert obs.product == pytest.approx(hydrogenic.stretched_state_product(n), rel=1e-14)


def test_s_state_product():
    for n in range(1, 7):
        obs = hydrogenic.observables(HydrogenicSpec(1, n, 0))
        assert obs.product == pytest.approx(0.5 * math.sqrt(n * n + 2), rel=1e-14)


def test_energy_ground_state_hydrogen():
    e = hydrogenic.energy(HydrogenicSpec(1, 1, 0))
    assert e.ev == pytest.approx(-13.598, abs=2e-3)
    he = hydrogenic.energy(HydrogenicSpec(2, 1, 0))
    assert he.ev == pytest.approx(-54.4, abs=0.05)


def test_energy_mass_mismatch():
    with pytest.raises(ValueError):
        hydrogenic.energy(HydrogenicSpec(2, 1, 0), mu=constants.reduced_mass(1))


def test_reduced_mass_table():
    assert [m.Z for m in constants.REDUCED_MASSES] == [1, 2, 3, 4]
    with pytest.raises(KeyError):
        constants.reduced_mass(5)


@pytest.mark.parametrize("Z", [1, 2, 3, 4])
def test_most_probable_radius(Z):
    spec = HydrogenicSpec(Z, 1, 0)

    def density(r):
        return r * r * hydrogenic.radial_wavefunction(spec, r) ** 2

    def slope(r):
        R = hydrogenic.radial_wavefunction(spec, r)
        return 2 * r * R * R + 2 * r * r * R * hydrogenic.radial_derivative(spec, r)

    r_mp = locate_maximum(density, 0.0, 10.0 / Z, derivative=slope)
    assert abs(r_mp - hydrogenic.most_probable_radius_ground(Z)) < 1e-8


@pytest.mark.parametrize("n", range(1, 7))
def test_degeneracy(n):
    assert hydrogenic.degeneracy(n) == n * n
    assert hydrogenic.degeneracy(n, spin=True) == 2 * n * n
