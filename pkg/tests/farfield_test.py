"""Tests for the patchlab.farfield module."""

from __future__ import annotations

import math

import numpy as np
import pytest

from patchlab.antenna.models import PHYSICAL_CONSTANTS, AntennaSpec, Frequency
from patchlab.exceptions import DomainError, OffGridAngleError
from patchlab.farfield import (
    ModelGeometry,
    PatternCut,
    Plane,
    cut_angles,
    gain_delta,
    model_geometry,
    pattern_cut,
    radiation_intensity,
    sample_pattern,
    wave_number,
)
from patchlab.radiometry import (
    DBI_FLOOR,
    RadiationPattern,
    antenna_efficiency,
    directivity,
    to_dbi,
)

from .support.patterns import (
    GOLDEN_ATOL_DB,
    GOLDEN_METRICS,
    riemann_directivity,
)


def synthetic_cut(gains: dict[float, float]) -> PatternCut:
    angles = [float(a) for a in range(-90, 91)]
    return PatternCut(
        plane=Plane.E,
        theta_deg=tuple(angles),
        gain_dbi=tuple(gains.get(a, 0.0) for a in angles),
    )


def test_wave_number() -> None:
    assert wave_number(Frequency(1.57542e9)) == pytest.approx(33.02, abs=0.01)
    assert wave_number(Frequency(1.5925e9)) == pytest.approx(33.38, abs=0.01)
    unit = Frequency(PHYSICAL_CONSTANTS.c0 / (2 * math.pi))
    assert wave_number(unit) == pytest.approx(1.0, rel=1e-15)


def test_model_geometry(gps_l1: AntennaSpec) -> None:
    geometry = model_geometry(gps_l1)
    assert geometry.wave_number == wave_number(gps_l1.operating_frequency)
    assert geometry.width == 0.01225
    assert geometry.height == 0.0045
    # Le = L + 2ΔL with ΔL for the as-built 12.25 mm width.
    assert geometry.effective_length == pytest.approx(15.8368e-3, abs=1e-6)

    with pytest.raises(DomainError):
        ModelGeometry(
            wave_number=33.0, effective_length=0.0, width=0.01, height=0.001
        )


def test_radiation_intensity(gps_l1: AntennaSpec) -> None:
    geometry = model_geometry(gps_l1)
    for phi in np.linspace(0, 2 * math.pi, 13):
        assert radiation_intensity(geometry, 0.0, phi) == 1.0
    assert radiation_intensity(geometry, math.radians(100), 0.3) == 0.0
    assert radiation_intensity(geometry, math.pi / 2, 0.0) == 0.0
    assert radiation_intensity(geometry, math.pi / 2, math.pi / 2) > 0.9

    rng = np.random.default_rng(3)
    theta = rng.uniform(0, math.pi, size=10_000)
    phi = rng.uniform(0, 2 * math.pi, size=10_000)
    values = np.asarray(radiation_intensity(geometry, theta, phi))
    assert values.shape == (10_000,)
    assert np.all(values >= 0.0)
    assert np.all(values <= 1.0)
    assert np.all(values[theta > math.pi / 2] == 0.0)


def test_sample_pattern(gps_l1: AntennaSpec) -> None:
    pattern = sample_pattern(gps_l1, 181, 360)
    assert pattern.shape == (181, 360)
    assert np.all(pattern.intensity[0] == 1.0)
    assert pattern.intensity.max() == 1.0
    assert pattern.intensity.min() >= 0.0
    assert np.all(pattern.intensity[91:] == 0.0)

    geometry = model_geometry(gps_l1)
    upper = np.asarray(radiation_intensity(geometry, math.pi / 2, pattern.phi))
    np.testing.assert_allclose(
        pattern.intensity[90], 0.5 * upper, rtol=0, atol=1e-15
    )


def test_sample_pattern_symmetry(gps_glonass: AntennaSpec) -> None:
    nphi = 360
    pattern = sample_pattern(gps_glonass, 91, nphi)
    j = np.arange(nphi)
    mirrored = pattern.intensity[:, (-j) % nphi]
    np.testing.assert_allclose(pattern.intensity, mirrored, rtol=0, atol=1e-12)
    reflected = pattern.intensity[:, (nphi // 2 - j) % nphi]
    np.testing.assert_allclose(
        pattern.intensity, reflected, rtol=0, atol=1e-12
    )


def test_directivity_matches_riemann_oracle(gps_l1: AntennaSpec) -> None:
    oracle_dbi = to_dbi(riemann_directivity(gps_l1))
    assert oracle_dbi == pytest.approx(
        GOLDEN_METRICS["gps_l1"].directivity_dbi, abs=GOLDEN_ATOL_DB
    )

    default_dbi = to_dbi(directivity(sample_pattern(gps_l1)))
    assert default_dbi == pytest.approx(oracle_dbi, abs=1e-3)

    coarse_dbi = to_dbi(directivity(sample_pattern(gps_l1, 181, 360)))
    assert coarse_dbi == pytest.approx(oracle_dbi, abs=1e-3)


def test_directivity_convergence(gps_glonass: AntennaSpec) -> None:
    coarse = to_dbi(directivity(sample_pattern(gps_glonass, 361, 720)))
    fine = to_dbi(directivity(sample_pattern(gps_glonass, 721, 1440)))
    assert abs(coarse - fine) < 1e-3


def test_cut_angles() -> None:
    angles = cut_angles()
    assert angles.size == 181
    assert angles[0] == -90.0
    assert angles[90] == 0.0
    assert angles[-1] == 90.0


@pytest.mark.parametrize("plane", [Plane.E, Plane.H])
def test_pattern_cut(
    gps_l1: AntennaSpec, gps_glonass: AntennaSpec, plane: Plane
) -> None:
    for spec in (gps_l1, gps_glonass):
        geometry = model_geometry(spec)
        assert geometry.wave_number * geometry.effective_length < math.pi

        pattern = sample_pattern(spec, 181, 360)
        cut = pattern_cut(spec, plane, pattern=pattern)
        assert cut.plane == plane
        assert len(cut.theta_deg) == 181
        assert len(cut.gain_dbi) == 181

        broadside = cut.gain_at(0.0)
        e0 = antenna_efficiency(spec).e0
        assert broadside == to_dbi(e0 * directivity(pattern))
        assert max(cut.gain_dbi) == broadside

        gains = np.array(cut.gain_dbi)
        np.testing.assert_allclose(gains, gains[::-1], rtol=0, atol=1e-12)


def test_pattern_cut_samples_pattern(gps_l1: AntennaSpec) -> None:
    cut = pattern_cut(gps_l1, Plane.H, ntheta=181, nphi=360)
    pattern = sample_pattern(gps_l1, 181, 360)
    assert cut == pattern_cut(gps_l1, Plane.H, pattern=pattern)


def test_pattern_cut_scaling_invariance(gps_l1: AntennaSpec) -> None:
    pattern = sample_pattern(gps_l1, 181, 360)
    scaled = RadiationPattern.from_intensity(
        pattern.theta, pattern.phi, 7.5 * pattern.intensity
    )
    for plane in Plane:
        reference = pattern_cut(gps_l1, plane, pattern=pattern)
        cut = pattern_cut(gps_l1, plane, pattern=scaled)
        assert gain_delta(cut) == pytest.approx(
            gain_delta(reference), abs=1e-12
        )


def test_pattern_cut_validation() -> None:
    with pytest.raises(DomainError):
        PatternCut(plane=Plane.E, theta_deg=(0.0, 1.0), gain_dbi=(0.0,))
    with pytest.raises(DomainError):
        PatternCut(plane=Plane.E, theta_deg=(1.0, 0.0), gain_dbi=(0.0, 0.0))
    with pytest.raises(DomainError):
        PatternCut(plane=Plane.E, theta_deg=(0.0, 1.0), gain_dbi=(0.0, -121))


def test_gain_delta_synthetic() -> None:
    cut = synthetic_cut({30.0: 1.00, 90.0: 0.15})
    assert gain_delta(cut) == pytest.approx(0.85)
    assert gain_delta(cut, 90, 30) == pytest.approx(-0.85)

    cut = synthetic_cut({30.0: 2.5, 90.0: 2.5})
    assert gain_delta(cut) == 0.0

    with pytest.raises(OffGridAngleError):
        gain_delta(cut, 30.5, 90)
    with pytest.raises(OffGridAngleError):
        gain_delta(cut, 30, 95)


@pytest.mark.parametrize("name", ["gps_l1", "gps_glonass"])
def test_gain_delta_fixture(
    request: pytest.FixtureRequest, name: str
) -> None:
    spec: AntennaSpec = request.getfixturevalue(name)
    golden = GOLDEN_METRICS[name]
    pattern = sample_pattern(spec, 181, 360)
    assert to_dbi(directivity(pattern)) == pytest.approx(
        golden.directivity_dbi, abs=GOLDEN_ATOL_DB
    )

    e_cut = pattern_cut(spec, Plane.E, pattern=pattern)
    h_cut = pattern_cut(spec, Plane.H, pattern=pattern)
    # The E-plane element factor vanishes at grazing incidence.
    assert e_cut.gain_at(90) == DBI_FLOOR
    assert gain_delta(e_cut) == pytest.approx(
        golden.gain_delta_eplane, abs=GOLDEN_ATOL_DB
    )
    assert gain_delta(h_cut) == pytest.approx(
        golden.gain_delta_hplane, abs=GOLDEN_ATOL_DB
    )


def test_gain_delta_grid_scaling(gps_glonass: AntennaSpec) -> None:
    for plane in Plane:
        coarse = pattern_cut(gps_glonass, plane, ntheta=181, nphi=360)
        fine = pattern_cut(gps_glonass, plane, ntheta=361, nphi=720)
        assert abs(gain_delta(coarse) - gain_delta(fine)) < 1e-3
