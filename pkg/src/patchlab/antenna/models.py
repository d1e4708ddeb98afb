"""Domain models for patch antenna specifications.

All quantities are stored in SI units (metres, hertz, ohms). Conversion
from the millimetre and gigahertz units used in spec documents happens in
`patchlab.antenna.units` and `patchlab.antenna.specfile`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import scipy.constants

from patchlab.exceptions import SpecValidationError

__all__ = [
    "PhysicalConstants",
    "PHYSICAL_CONSTANTS",
    "Frequency",
    "FrequencyBand",
    "PatchSpec",
    "SubstrateSpec",
    "GroundPlaneSpec",
    "FeedSpec",
    "SourceSpec",
    "AntennaSpec",
]


def _check_positive(value: float, field_name: str) -> None:
    if not (math.isfinite(value) and value > 0):
        raise SpecValidationError(
            field_name, f"must be a positive finite number, got {value!r}"
        )


def _check_non_negative(value: float, field_name: str) -> None:
    if not (math.isfinite(value) and value >= 0):
        raise SpecValidationError(
            field_name, f"must be a non-negative finite number, got {value!r}"
        )


def _check_finite(value: float, field_name: str) -> None:
    if not math.isfinite(value):
        raise SpecValidationError(
            field_name, f"must be a finite number, got {value!r}"
        )


def _check_fraction(value: float, field_name: str) -> None:
    if not (math.isfinite(value) and 0.0 <= value <= 1.0):
        raise SpecValidationError(
            field_name, f"must lie in [0, 1], got {value!r}"
        )


@dataclass(frozen=True)
class PhysicalConstants:
    """Free-space constants used by the design equations."""

    c0: float = scipy.constants.c
    """Speed of light in vacuum (m/s), exact by definition."""

    epsilon0: float = 8.8541878128e-12
    """Vacuum permittivity (F/m)."""

    mu0: float = 1.25663706212e-6
    """Vacuum permeability (H/m)."""

    def __post_init__(self) -> None:
        derived = 1.0 / math.sqrt(self.epsilon0 * self.mu0)
        if abs(self.c0 - derived) / self.c0 >= 1e-9:
            raise SpecValidationError(
                "c0", "inconsistent with 1/sqrt(epsilon0 * mu0)"
            )


PHYSICAL_CONSTANTS = PhysicalConstants()
"""The constants patchlab computes with."""


@dataclass(frozen=True)
class Frequency:
    """A positive frequency."""

    hertz: float

    def __post_init__(self) -> None:
        _check_positive(self.hertz, "hertz")

    @classmethod
    def from_ghz(cls, gigahertz: float) -> Frequency:
        return cls(gigahertz * 1e9)

    @property
    def gigahertz(self) -> float:
        return self.hertz / 1e9


@dataclass(frozen=True)
class FrequencyBand:
    """An operating band, carried as metadata."""

    low: Frequency
    """Lower band edge."""

    high: Frequency
    """Upper band edge."""

    def __post_init__(self) -> None:
        if not self.low.hertz < self.high.hertz:
            raise SpecValidationError(
                "band", "lower edge must be below upper edge"
            )

    def __contains__(self, frequency: Frequency) -> bool:
        return self.low.hertz <= frequency.hertz <= self.high.hertz


@dataclass(frozen=True)
class PatchSpec:
    """The radiating element."""

    length: float
    """Resonant length L (m), along the x axis."""

    width: float
    """Width W (m), along the y axis."""

    def __post_init__(self) -> None:
        _check_positive(self.length, "patch.length")
        _check_positive(self.width, "patch.width")


@dataclass(frozen=True)
class SubstrateSpec:
    """The dielectric substrate."""

    length: float
    """Length (m)."""

    width: float
    """Width (m)."""

    height: float
    """Thickness h (m)."""

    relative_permittivity: float
    """Dielectric constant εr (dimensionless)."""

    loss_tangent_metadata: Optional[float] = None
    """Dielectric loss tangent as quoted for the material.

    Stored for provenance only; no computation reads it.
    """

    def __post_init__(self) -> None:
        _check_positive(self.length, "substrate.length")
        _check_positive(self.width, "substrate.width")
        _check_positive(self.height, "substrate.height")
        if not (
            math.isfinite(self.relative_permittivity)
            and self.relative_permittivity >= 1.0
        ):
            raise SpecValidationError(
                "relative_permittivity",
                f"must be at least 1, got {self.relative_permittivity!r}",
            )
        if self.loss_tangent_metadata is not None:
            _check_non_negative(self.loss_tangent_metadata, "loss_tangent")


@dataclass(frozen=True)
class GroundPlaneSpec:
    """The conducting ground plane."""

    length: float
    """Length (m)."""

    width: float
    """Width (m)."""

    def __post_init__(self) -> None:
        _check_positive(self.length, "ground.length")
        _check_positive(self.width, "ground.width")


@dataclass(frozen=True)
class FeedSpec:
    """The feed and the terminal impedance it presents.

    The resistances and reactance are inputs; the antenna input impedance
    is composed from them by `patchlab.radiometry.input_impedance`.
    """

    feed_length: float
    """Feed pin length (m)."""

    radiation_resistance: float
    """Radiation resistance Rr (ohms)."""

    loss_resistance: float
    """Loss resistance RL (ohms)."""

    reactance: float
    """Antenna reactance XA (ohms)."""

    def __post_init__(self) -> None:
        _check_non_negative(self.feed_length, "feed.length")
        _check_non_negative(self.radiation_resistance, "feed.rr")
        _check_non_negative(self.loss_resistance, "feed.rl")
        _check_finite(self.reactance, "feed.xa")


@dataclass(frozen=True)
class SourceSpec:
    """The generator driving the antenna."""

    resistance: float
    """Generator resistance Rg (ohms)."""

    reactance: float
    """Generator reactance Xg (ohms)."""

    reference_impedance: float = 50.0
    """Reference impedance Z0 (ohms) for the reflection coefficient."""

    def __post_init__(self) -> None:
        _check_non_negative(self.resistance, "source.rg")
        _check_finite(self.reactance, "source.xg")
        _check_positive(self.reference_impedance, "source.z0")


@dataclass(frozen=True)
class AntennaSpec:
    """Full physical description of one patch antenna."""

    name: str

    operating_frequency: Frequency

    patch: PatchSpec

    substrate: SubstrateSpec

    ground: GroundPlaneSpec

    feed: FeedSpec

    source: SourceSpec

    conduction_efficiency: float = 1.0
    """Conduction efficiency ec."""

    dielectric_efficiency: float = 1.0
    """Dielectric efficiency ed."""

    band: Optional[FrequencyBand] = None
    """Operating band (metadata)."""

    mesh_wire_radius: Optional[float] = None
    """Solver mesh wire radius in metres (metadata)."""

    reference_gain_dbi: Optional[float] = None
    """Full-wave passive gain quoted for this antenna (metadata)."""

    description: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.name.strip():
            raise SpecValidationError("name", "must not be empty")
        _check_fraction(self.conduction_efficiency, "ec")
        _check_fraction(self.dielectric_efficiency, "ed")
        if (
            self.patch.length > self.substrate.length
            or self.patch.width > self.substrate.width
        ):
            raise SpecValidationError(
                "patch", "does not fit inside the substrate footprint"
            )
        if (
            self.substrate.length > self.ground.length
            or self.substrate.width > self.ground.width
        ):
            raise SpecValidationError(
                "ground", "is smaller than the substrate footprint"
            )
        if (
            self.band is not None
            and self.operating_frequency not in self.band
        ):
            raise SpecValidationError(
                "frequency", "lies outside the declared band"
            )
        if self.mesh_wire_radius is not None:
            _check_non_negative(self.mesh_wire_radius, "mesh_wire_radius")
        if self.reference_gain_dbi is not None:
            _check_finite(self.reference_gain_dbi, "reference_gain_dbi")
