"""Tests for the patchlab.synthesis module."""

from __future__ import annotations

import numpy as np
import pytest

from patchlab.antenna.models import PHYSICAL_CONSTANTS, Frequency
from patchlab.exceptions import (
    DomainError,
    InfeasibleDesignError,
    NoSolutionError,
    SingularityError,
)
from patchlab.synthesis import (
    effective_permittivity,
    guided_wavelength,
    invert_permittivity,
    length_extension,
    patch_length,
    patch_width,
    resonant_frequency,
    wavelength,
)

L1 = Frequency(1.57542e9)
GLONASS = Frequency(1.5925e9)

MM = 1e-3


def test_patch_width() -> None:
    assert patch_width(L1, 5.5) == pytest.approx(52.778 * MM, abs=0.005 * MM)
    assert patch_width(GLONASS, 5.5) == pytest.approx(
        52.212 * MM, abs=0.005 * MM
    )
    assert patch_width(L1, 1.0) == pytest.approx(95.147 * MM, abs=0.005 * MM)
    assert patch_width(L1, 1.0) == PHYSICAL_CONSTANTS.c0 / (2 * L1.hertz)

    with pytest.raises(DomainError):
        patch_width(L1, 0.5)


def test_patch_width_monotonic() -> None:
    widths = [patch_width(Frequency(f), 5.5) for f in (1e9, 1.5e9, 2e9)]
    assert widths[0] > widths[1] > widths[2]
    widths = [patch_width(L1, er) for er in (1.0, 2.2, 5.5, 10.2)]
    assert widths == sorted(widths, reverse=True)


def test_effective_permittivity() -> None:
    assert effective_permittivity(5.5, 4.5 * MM, 52.778 * MM) == pytest.approx(
        4.832, abs=0.001
    )
    assert effective_permittivity(1.0, 4.5 * MM, 52.778 * MM) == 1.0
    assert effective_permittivity(5.5, 0.0, 52.778 * MM) == 5.5

    with pytest.raises(DomainError):
        effective_permittivity(5.5, 4.5 * MM, 0.0)
    with pytest.raises(DomainError):
        effective_permittivity(5.5, -1 * MM, 52.778 * MM)


def test_effective_permittivity_bounds() -> None:
    rng = np.random.default_rng(7)
    for er, h, w in zip(
        rng.uniform(1.0, 100.0, size=1000),
        rng.uniform(0.0, 0.01, size=1000),
        rng.uniform(1e-4, 0.2, size=1000),
    ):
        eeff = effective_permittivity(float(er), float(h), float(w))
        assert 1.0 <= eeff <= er


def test_length_extension() -> None:
    assert length_extension(4.5 * MM, 52.778 * MM, 4.832) == pytest.approx(
        1.991 * MM, abs=0.002 * MM
    )
    assert length_extension(0.0, 52.778 * MM, 4.832) == 0.0
    assert length_extension(4.5 * MM, 52.212 * MM, 4.8275) == pytest.approx(
        1.990 * MM, abs=0.002 * MM
    )

    with pytest.raises(SingularityError):
        length_extension(4.5 * MM, 52.778 * MM, 0.258)


def test_limit_laws() -> None:
    h = 1e-12
    w = 52.778 * MM
    assert effective_permittivity(5.5, h, w) == pytest.approx(5.5, rel=1e-6)
    eeff = effective_permittivity(5.5, h, w)
    assert length_extension(h, w, eeff) == pytest.approx(0.0, abs=1e-6 * MM)


def test_patch_length() -> None:
    result = patch_length(L1, 5.5, 4.5 * MM)
    assert result.width == pytest.approx(52.778 * MM, abs=0.005 * MM)
    assert result.effective_permittivity == pytest.approx(4.832, abs=0.001)
    assert result.length_extension == pytest.approx(1.991 * MM, abs=0.002 * MM)
    assert result.length == pytest.approx(39.30 * MM, abs=0.02 * MM)
    assert result.target_frequency == L1
    assert result.effective_length == pytest.approx(
        result.length + 2 * result.length_extension
    )

    result = patch_length(GLONASS, 5.5, 4.5 * MM)
    assert result.length == pytest.approx(38.86 * MM, abs=0.02 * MM)

    result = patch_length(L1, 1.0, 0.0)
    assert result.effective_permittivity == 1.0
    assert result.length_extension == 0.0
    assert result.length == pytest.approx(95.147 * MM, abs=0.005 * MM)


def test_patch_length_infeasible() -> None:
    with pytest.raises(InfeasibleDesignError) as excinfo:
        patch_length(L1, 1.0, 1.0)
    design = excinfo.value.design
    assert design.length <= 0
    assert design.width == pytest.approx(95.147 * MM, abs=0.005 * MM)
    assert design.length_extension > 0


def test_wavelength() -> None:
    assert wavelength(L1) == pytest.approx(190.294 * MM, abs=0.001 * MM)
    assert guided_wavelength(L1, 4.0) == pytest.approx(wavelength(L1) / 2)
    with pytest.raises(DomainError):
        guided_wavelength(L1, 0.0)


def test_resonant_frequency() -> None:
    # The as-built 12.25 mm patch resonates far above L1 at this εr.
    fr = resonant_frequency(12.25 * MM, 12.25 * MM, 4.5 * MM, 5.5)
    assert 4.5e9 < fr.hertz < 4.7e9
    assert fr.hertz == pytest.approx(4.609e9, rel=1e-3)

    fr = resonant_frequency(95.147 * MM, 50 * MM, 0.0, 1.0)
    assert fr.hertz == pytest.approx(1.57542e9, rel=1e-4)

    with pytest.raises(DomainError):
        resonant_frequency(0.0, 12.25 * MM, 4.5 * MM, 5.5)


def test_resonant_frequency_monotonic() -> None:
    w = 12.25 * MM
    h = 4.5 * MM
    by_length = [
        resonant_frequency(length * MM, w, h, 5.5).hertz
        for length in (10.0, 12.25, 20.0, 40.0)
    ]
    assert by_length == sorted(by_length, reverse=True)
    by_er = [
        resonant_frequency(12.25 * MM, w, h, er).hertz
        for er in (1.0, 2.2, 5.5, 10.2, 50.0)
    ]
    assert by_er == sorted(by_er, reverse=True)


def test_round_trip() -> None:
    """Synthesizing a patch and estimating its resonance recovers the
    target frequency.
    """
    rng = np.random.default_rng(1575)
    for f, er, h in zip(
        rng.uniform(1e9, 3e9, size=1000),
        rng.uniform(1.5, 10.0, size=1000),
        rng.uniform(0.5 * MM, 6 * MM, size=1000),
    ):
        target = Frequency(float(f))
        result = patch_length(target, float(er), float(h))
        fr = resonant_frequency(result.length, result.width, float(h), er)
        assert fr.hertz == pytest.approx(target.hertz, rel=1e-9)


def test_invert_permittivity() -> None:
    w = 12.25 * MM
    h = 4.5 * MM
    f = resonant_frequency(12.25 * MM, w, h, 5.5)
    assert invert_permittivity(12.25 * MM, w, h, f) == pytest.approx(
        5.5, abs=1e-6
    )

    er = invert_permittivity(12.25 * MM, w, h, L1)
    assert 50.0 < er < 55.0
    fr = resonant_frequency(12.25 * MM, w, h, er)
    assert abs(fr.hertz - L1.hertz) / L1.hertz <= 1e-9


def test_invert_permittivity_consistency() -> None:
    w = 30 * MM
    h = 1.6 * MM
    for er in np.linspace(1.0, 100.0, 25):
        f = resonant_frequency(28 * MM, w, h, float(er))
        assert invert_permittivity(28 * MM, w, h, f) == pytest.approx(
            er, abs=1e-6
        )


def test_invert_permittivity_no_solution() -> None:
    with pytest.raises(NoSolutionError) as excinfo:
        invert_permittivity(95 * MM, 50 * MM, 1.6 * MM, Frequency(100e9))
    f_low_er, f_high_er = excinfo.value.bracket_frequencies
    assert f_low_er > f_high_er
    assert f_low_er < 100e9
