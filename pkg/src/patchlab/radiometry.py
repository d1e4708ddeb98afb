"""Radiometric figures of merit: directivity, gain, efficiencies and
impedance match.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Optional

import numpy as np

from patchlab.config import config
from patchlab.exceptions import (
    DegeneratePatternError,
    DomainError,
    SingularityError,
)

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from patchlab.antenna.models import AntennaSpec, FeedSpec

__all__ = [
    "DBI_FLOOR",
    "RETURN_LOSS_CAP",
    "RadiationPattern",
    "EfficiencyBreakdown",
    "Impedance",
    "pattern_grid",
    "pattern_solid_angle",
    "directivity",
    "gain_from_intensity",
    "realized_gain",
    "radiation_efficiency",
    "input_impedance",
    "reflection_coefficient",
    "efficiency_chain",
    "antenna_efficiency",
    "vswr",
    "return_loss_db",
    "to_dbi",
]

DBI_FLOOR = -120.0
"""Decibel value reported for zero (and vanishingly small) gain."""

RETURN_LOSS_CAP = 120.0
"""Return loss (dB) reported for a perfect match."""

_GAMMA_SLACK = 1e-12


def pattern_grid(
    ntheta: Optional[int] = None, nphi: Optional[int] = None
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Create the sampling grid used by `RadiationPattern`.

    Parameters
    ----------
    ntheta : `int`, optional
        Polar samples over [0, π], both poles included. Defaults to
        ``config.quadrature_ntheta``.
    nphi : `int`, optional
        Azimuth samples over [0, 2π), starting at φ = 0. Defaults to
        ``config.quadrature_nphi``.

    Returns
    -------
    theta, phi : `numpy.ndarray`
        The two 1-D sample vectors, in radians.
    """
    ntheta = config.quadrature_ntheta if ntheta is None else ntheta
    nphi = config.quadrature_nphi if nphi is None else nphi
    if ntheta < 2:
        raise DomainError(f"At least 2 polar samples are needed: {ntheta}")
    if nphi < 1:
        raise DomainError(f"At least 1 azimuth sample is needed: {nphi}")
    theta = np.linspace(0.0, math.pi, ntheta)
    phi = np.arange(nphi) * (2 * math.pi / nphi)
    return theta, phi


@dataclass(frozen=True, eq=False)
class RadiationPattern:
    """Normalized radiation intensity F(θ, φ) sampled on a spherical grid.

    Use `from_intensity` or `from_function` to build a pattern from
    unnormalized samples; the constructor expects samples that are already
    normalized to a peak of exactly 1.
    """

    theta: NDArray[np.float64]
    """Polar angles, uniform over [0, π] with both poles included."""

    phi: NDArray[np.float64]
    """Azimuth angles, uniform with spacing 2π/Nφ."""

    intensity: NDArray[np.float64]
    """Samples, shape (Nθ, Nφ), values in [0, 1] with maximum 1."""

    def __post_init__(self) -> None:
        theta = np.array(self.theta, dtype=float)
        phi = np.array(self.phi, dtype=float)
        intensity = np.array(self.intensity, dtype=float)
        if theta.ndim != 1 or theta.size < 2:
            raise DomainError("theta must be a vector of at least 2 samples")
        if phi.ndim != 1 or phi.size < 1:
            raise DomainError("phi must be a vector of at least 1 sample")
        if intensity.shape != (theta.size, phi.size):
            raise DomainError(
                f"intensity must have shape {(theta.size, phi.size)}, "
                f"got {intensity.shape}"
            )
        expected_theta = np.linspace(0.0, math.pi, theta.size)
        if not np.allclose(theta, expected_theta, rtol=0, atol=1e-12):
            raise DomainError("theta must be uniform over [0, pi]")
        dphi = 2 * math.pi / phi.size
        expected_phi = phi[0] + np.arange(phi.size) * dphi
        if not np.allclose(phi, expected_phi, rtol=0, atol=1e-12):
            raise DomainError("phi must be uniform with spacing 2*pi/N")
        if not np.all(np.isfinite(intensity)):
            raise DomainError("intensity samples must be finite")
        if intensity.min() < 0 or intensity.max() != 1.0:
            raise DomainError(
                "intensity must lie in [0, 1] with a peak of exactly 1"
            )
        for array in (theta, phi, intensity):
            array.flags.writeable = False
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "intensity", intensity)

    @classmethod
    def from_intensity(
        cls, theta: ArrayLike, phi: ArrayLike, values: ArrayLike
    ) -> RadiationPattern:
        """Create a pattern from unnormalized, non-negative samples.

        Raises
        ------
        patchlab.exceptions.DegeneratePatternError
            Raised if every sample is zero.
        patchlab.exceptions.DomainError
            Raised if a sample is negative or not finite.
        """
        samples = np.array(values, dtype=float)
        if not np.all(np.isfinite(samples)) or np.any(samples < 0):
            raise DomainError("intensity samples must be finite and >= 0")
        peak = samples.max() if samples.size else 0.0
        if peak == 0:
            raise DegeneratePatternError("Pattern has no radiated power.")
        return cls(theta=theta, phi=phi, intensity=samples / peak)

    @classmethod
    def from_function(
        cls,
        func: Callable[[NDArray[np.float64], NDArray[np.float64]], ArrayLike],
        ntheta: Optional[int] = None,
        nphi: Optional[int] = None,
    ) -> RadiationPattern:
        """Sample a vectorized intensity function ``func(theta, phi)`` on
        the default grid.
        """
        theta, phi = pattern_grid(ntheta, nphi)
        theta_grid, phi_grid = np.meshgrid(theta, phi, indexing="ij")
        values = np.broadcast_to(func(theta_grid, phi_grid), theta_grid.shape)
        return cls.from_intensity(theta, phi, values)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.theta.size, self.phi.size)


@dataclass(frozen=True)
class EfficiencyBreakdown:
    """Efficiency chain e0 = er · ec · ed."""

    gamma: complex
    """Reflection coefficient that produced ``er``."""

    er: float
    """Reflection (mismatch) efficiency 1 − |Γ|²."""

    ec: float
    """Conduction efficiency."""

    ed: float
    """Dielectric efficiency."""

    e0: float
    """Total efficiency."""


@dataclass(frozen=True)
class Impedance:
    """A complex impedance R + jX (ohms)."""

    resistance: float

    reactance: float

    @property
    def as_complex(self) -> complex:
        return complex(self.resistance, self.reactance)


def pattern_solid_angle(pattern: RadiationPattern) -> float:
    """Pattern solid angle Ωp = ∬ F(θ, φ) sinθ dθ dφ (steradians).

    The φ integral uses the uniform periodic rule. The θ integral uses the
    composite trapezoid rule plus the Euler–Maclaurin end correction
    h²/12 · (S(0) + S(π)), where S(θ) is the φ-integrated row; with the
    sinθ Jacobian that correction only needs the pole rows. Rows are
    accumulated in ascending θ.

    The rule assumes a pattern that is smooth in θ. A pattern with a jump
    at a sampled polar angle, such as the ground-plane cutoff at 90°, must
    carry the mean of the two one-sided limits on that row; sampling either
    limit instead costs a first-order error (about 1% in D for a uniform
    hemisphere on 361 rows). `patchlab.farfield.sample_pattern` follows
    this convention.

    Raises
    ------
    patchlab.exceptions.DegeneratePatternError
        Raised if the integral is not positive.
    """
    ntheta, nphi = pattern.shape
    h = math.pi / (ntheta - 1)
    rows = pattern.intensity.sum(axis=1) * (2 * math.pi / nphi)
    weights = h * np.sin(pattern.theta)
    weights[0] *= 0.5
    weights[-1] *= 0.5
    solid_angle = 0.0
    for weight, row in zip(weights, rows):
        solid_angle += weight * row
    solid_angle += h * h / 12 * (rows[0] + rows[-1])
    if not solid_angle > 0:
        raise DegeneratePatternError(
            f"Pattern solid angle is not positive: {solid_angle!r}"
        )
    return float(solid_angle)


def directivity(pattern: RadiationPattern) -> float:
    """Directivity D = 4π / Ωp."""
    return 4 * math.pi / pattern_solid_angle(pattern)


def gain_from_intensity(intensity: float, input_power: float) -> float:
    """Gain from radiation intensity U (W/sr) and accepted power Pin (W):
    G = 4π U / Pin.
    """
    if not input_power > 0:
        raise DomainError(f"Input power must be positive: {input_power!r}")
    if not intensity >= 0:
        raise DomainError(
            f"Radiation intensity must be non-negative: {intensity!r}"
        )
    return 4 * math.pi * intensity / input_power


def realized_gain(directivity: float, total_efficiency: float) -> float:
    """Gain G = e0 · D."""
    if not directivity >= 0:
        raise DomainError(f"Directivity must be non-negative: {directivity!r}")
    if not 0 <= total_efficiency <= 1:
        raise DomainError(
            f"Efficiency must lie in [0, 1]: {total_efficiency!r}"
        )
    return total_efficiency * directivity


def radiation_efficiency(radiated_power: float, input_power: float) -> float:
    """Radiation efficiency Prad / Pt.

    Raises
    ------
    patchlab.exceptions.DomainError
        Raised if Pt ≤ 0, or Prad is negative or exceeds Pt.
    """
    if not input_power > 0:
        raise DomainError(f"Input power must be positive: {input_power!r}")
    if not 0 <= radiated_power <= input_power:
        raise DomainError(
            f"Radiated power {radiated_power!r} W must lie in "
            f"[0, {input_power!r}] W"
        )
    return radiated_power / input_power


def input_impedance(feed: FeedSpec) -> Impedance:
    """Antenna input impedance ZA = (Rr + RL) + jXA."""
    return Impedance(
        resistance=feed.radiation_resistance + feed.loss_resistance,
        reactance=feed.reactance,
    )


def reflection_coefficient(
    impedance: Impedance, reference_impedance: float
) -> complex:
    """Voltage reflection coefficient Γ = (ZA − Z0) / (ZA + Z0).

    Raises
    ------
    patchlab.exceptions.DomainError
        Raised if Z0 ≤ 0.
    patchlab.exceptions.SingularityError
        Raised if ZA = −Z0.
    """
    if not reference_impedance > 0:
        raise DomainError(
            f"Reference impedance must be positive: {reference_impedance!r}"
        )
    za = impedance.as_complex
    denominator = za + reference_impedance
    if denominator == 0:
        raise SingularityError(
            "Reflection coefficient is singular for ZA = -Z0"
        )
    return (za - reference_impedance) / denominator


def efficiency_chain(
    gamma: complex, conduction: float = 1.0, dielectric: float = 1.0
) -> EfficiencyBreakdown:
    """Combine mismatch, conduction and dielectric efficiencies.

    Raises
    ------
    patchlab.exceptions.DomainError
        Raised if |Γ| > 1 or an efficiency lies outside [0, 1].
    """
    magnitude = abs(gamma)
    if not magnitude <= 1 + _GAMMA_SLACK:
        raise DomainError(f"|gamma| must not exceed 1: {magnitude!r}")
    for name, value in (("ec", conduction), ("ed", dielectric)):
        if not 0 <= value <= 1:
            raise DomainError(f"{name} must lie in [0, 1]: {value!r}")
    er = max(0.0, 1 - magnitude**2)
    return EfficiencyBreakdown(
        gamma=complex(gamma),
        er=er,
        ec=conduction,
        ed=dielectric,
        e0=er * conduction * dielectric,
    )


def vswr(gamma: complex) -> float:
    """Voltage standing wave ratio (1 + |Γ|) / (1 − |Γ|)."""
    magnitude = abs(gamma)
    if magnitude >= 1:
        return math.inf
    return (1 + magnitude) / (1 - magnitude)


def return_loss_db(gamma: complex) -> float:
    """Return loss −20 log10 |Γ|, capped at `RETURN_LOSS_CAP`."""
    magnitude = abs(gamma)
    if magnitude == 0:
        return RETURN_LOSS_CAP
    return min(RETURN_LOSS_CAP, -20 * math.log10(magnitude))


def to_dbi(value: float) -> float:
    """Convert a linear gain to dBi, with zero mapped to `DBI_FLOOR`."""
    if not value >= 0:
        raise DomainError(f"Gain must be non-negative: {value!r}")
    if value == 0:
        return DBI_FLOOR
    return max(DBI_FLOOR, 10 * math.log10(value))


def antenna_efficiency(spec: AntennaSpec) -> EfficiencyBreakdown:
    """Efficiency chain of a spec: the feed impedance matched against the
    source reference impedance, with the spec's conduction and dielectric
    efficiencies.
    """
    gamma = reflection_coefficient(
        input_impedance(spec.feed), spec.source.reference_impedance
    )
    return efficiency_chain(
        gamma, spec.conduction_efficiency, spec.dielectric_efficiency
    )
