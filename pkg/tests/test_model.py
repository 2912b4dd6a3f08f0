import numpy as np
import pytest

from cramz import (LatticeParams, EmitterParams, ModelParams, OutOfBandError,
                   dispersion, group_velocity, momentum_from_energy)

LAT = LatticeParams(omega_c=2.0, xi=1.0)


def test_dispersion_band_center():
    assert dispersion(np.pi / 2, LAT) == pytest.approx(2.0, abs=1e-15)


def test_dispersion_lower_edge():
    assert dispersion(0.0, LAT) == pytest.approx(0.0, abs=1e-15)


def test_dispersion_hand_value():
    # 2 - 2*cos(2*pi/3) = 2 + 1 = 3
    assert dispersion(2 * np.pi / 3, LAT) == pytest.approx(3.0, abs=1e-14)


def test_dispersion_rejects_out_of_range_momentum():
    with pytest.raises(ValueError):
        dispersion(-0.1, LAT)
    with pytest.raises(ValueError):
        dispersion(np.pi + 0.1, LAT)


def test_momentum_from_energy_center_and_edge():
    assert momentum_from_energy(2.0, LAT) == pytest.approx(np.pi / 2, abs=1e-14)
    assert momentum_from_energy(0.0, LAT) == pytest.approx(0.0, abs=1e-14)


def test_momentum_from_energy_out_of_band_names_limits():
    with pytest.raises(OutOfBandError, match=r"\[0\.0, 4\.0\]"):
        momentum_from_energy(4.5, LAT)


def test_momentum_from_energy_exact_edges_of_inexact_band():
    # band limits that are not exactly representable must not produce NaN
    lat = LatticeParams(omega_c=2.0, xi=0.3)
    k = momentum_from_energy(lat.band_max, lat)
    assert np.isfinite(k) and k == pytest.approx(np.pi, abs=1e-7)


def test_group_velocity_values():
    assert group_velocity(np.pi / 2, LAT) == pytest.approx(2.0, abs=1e-15)
    assert group_velocity(0.0, LAT) == pytest.approx(0.0, abs=1e-15)
    assert group_velocity(np.pi / 3, LAT) == pytest.approx(np.sqrt(3.0),
                                                           abs=1e-14)


def test_group_velocity_matches_finite_difference():
    h = 1e-5
    k = np.linspace(0.05, np.pi - 0.05, 101)
    fd = (dispersion(k + h, LAT) - dispersion(k - h, LAT)) / (2 * h)
    assert np.max(np.abs(group_velocity(k, LAT) - fd)) < 1e-9


def test_round_trip_bulk():
    # Away from the edges the inversion is exact to 1e-12; within
    # ~1e-4 of an edge the energy float cannot carry the momentum
    # information (dk ~ eps / sin k), hence the sampling margin.
    rng = np.random.default_rng(123)
    k = rng.uniform(1e-3, np.pi - 1e-3, size=10_000)
    back = momentum_from_energy(dispersion(k, LAT), LAT)
    assert np.max(np.abs(back - k)) < 1e-12


@pytest.mark.parametrize("k", [1e-5, 1e-4, 1e-3, np.pi - 1e-4, np.pi - 1e-5])
def test_round_trip_edges_within_conditioning_bound(k):
    back = momentum_from_energy(dispersion(k, LAT), LAT)
    bound = 8 * np.finfo(float).eps * max(abs(LAT.band_max), 1.0) / np.sin(k)
    assert abs(back - k) < max(bound, 1e-13)


def test_dispersion_strictly_increasing():
    k = np.linspace(0.0, np.pi, 10_001)
    assert np.all(np.diff(dispersion(k, LAT)) > 0)


def test_parameter_validation():
    with pytest.raises(ValueError):
        LatticeParams(omega_c=2.0, xi=0.0)
    with pytest.raises(ValueError):
        LatticeParams(omega_c=np.nan, xi=1.0)
    with pytest.raises(ValueError):
        EmitterParams(omega=2.0, g0=-0.1, g1=0.0)
    with pytest.raises(ValueError):
        EmitterParams(omega=np.inf, g0=0.0, g1=0.0)


def test_create_defaults_omega_to_omega_c():
    p = ModelParams.create(omega_c=3.0, xi=0.5)
    assert p.omega == 3.0
    assert p.lattice.band_min == 2.0 and p.lattice.band_max == 4.0
    q = ModelParams.create(omega_c=3.0, xi=0.5, omega=1.0, g0=0.2, g1=0.3)
    assert (q.omega, q.g0, q.g1) == (1.0, 0.2, 0.3)
