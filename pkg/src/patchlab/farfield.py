"""Closed-form far-field model of a rectangular patch.

The patch is modelled as two radiating slots of width W separated by the
effective length Le = L + 2ΔL, over an infinite ground plane in the
z = 0 plane. Broadside is +z (θ = 0), the resonant length lies along x,
so the E-plane is φ = 0 and the H-plane is φ = 90°.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Optional, Union

import numpy as np
import structlog

from patchlab.antenna.models import PHYSICAL_CONSTANTS, Frequency
from patchlab.config import config
from patchlab.exceptions import DomainError, OffGridAngleError
from patchlab.radiometry import (
    DBI_FLOOR,
    RadiationPattern,
    antenna_efficiency,
    directivity,
    pattern_grid,
    to_dbi,
)
from patchlab.synthesis import effective_permittivity, length_extension

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from patchlab.antenna.models import AntennaSpec

__all__ = [
    "Plane",
    "ModelGeometry",
    "PatternCut",
    "CUT_STEP_DEG",
    "wave_number",
    "model_geometry",
    "radiation_intensity",
    "sample_pattern",
    "cut_angles",
    "pattern_cut",
    "gain_delta",
]

CUT_STEP_DEG = 1.0
"""Angular step of pattern cuts, in degrees."""

_CUT_LIMIT_DEG = 90

_SINC_SERIES_LIMIT = 1e-6

_HORIZON_ATOL = 1e-12

_GRID_ATOL_DEG = 1e-9

logger = structlog.get_logger(config.logger_name)


class Plane(str, Enum):
    """Principal pattern planes."""

    E = "E"
    """The plane containing the resonant length (φ = 0)."""

    H = "H"
    """The plane across the resonant length (φ = 90°)."""

    @property
    def phi(self) -> float:
        """Azimuth of the positive-θ half of the cut (radians)."""
        return 0.0 if self is Plane.E else math.pi / 2


@dataclass(frozen=True)
class ModelGeometry:
    """Electrical dimensions of the two-slot model."""

    wave_number: float
    """Free-space wavenumber k0 (rad/m)."""

    effective_length: float
    """Slot separation Le = L + 2ΔL (m)."""

    width: float
    """Slot length, the patch width W (m)."""

    height: float
    """Substrate thickness h (m)."""

    def __post_init__(self) -> None:
        for name in ("wave_number", "effective_length", "width", "height"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be positive, got {value!r}")


@dataclass(frozen=True)
class PatternCut:
    """Realized gain along a principal plane, from −90° to +90°.

    Negative angles lie in the φ + 180° half of the plane.
    """

    plane: Plane

    theta_deg: tuple[float, ...]
    """Polar angles, strictly increasing (degrees)."""

    gain_dbi: tuple[float, ...]
    """Realized gain at each angle (dBi)."""

    def __post_init__(self) -> None:
        if len(self.theta_deg) != len(self.gain_dbi):
            raise DomainError("theta_deg and gain_dbi differ in length")
        if any(b <= a for a, b in zip(self.theta_deg, self.theta_deg[1:])):
            raise DomainError("theta_deg must be strictly increasing")
        if any(not g >= DBI_FLOOR for g in self.gain_dbi):
            raise DomainError(f"gain_dbi must not fall below {DBI_FLOOR}")

    def gain_at(self, angle_deg: float) -> float:
        """Gain at a sampled angle.

        Raises
        ------
        patchlab.exceptions.OffGridAngleError
            Raised if the angle is not one of the cut's samples.
        """
        angles = np.asarray(self.theta_deg)
        index = int(np.argmin(np.abs(angles - angle_deg)))
        if abs(angles[index] - angle_deg) > _GRID_ATOL_DEG:
            raise OffGridAngleError(
                f"{angle_deg!r} deg is not a sample of the {self.plane.value}"
                "-plane cut"
            )
        return self.gain_dbi[index]


def wave_number(frequency: Frequency) -> float:
    """Free-space wavenumber k0 = 2π f / c0 (rad/m)."""
    return 2 * math.pi * frequency.hertz / PHYSICAL_CONSTANTS.c0


def model_geometry(spec: AntennaSpec) -> ModelGeometry:
    """Two-slot geometry of an as-built spec.

    ΔL uses the effective permittivity of the spec's own patch width, so
    Le reflects the patch as built rather than a resynthesized design.
    """
    width = spec.patch.width
    height = spec.substrate.height
    eeff = effective_permittivity(
        spec.substrate.relative_permittivity, height, width
    )
    delta_l = length_extension(height, width, eeff)
    return ModelGeometry(
        wave_number=wave_number(spec.operating_frequency),
        effective_length=spec.patch.length + 2 * delta_l,
        width=width,
        height=height,
    )


def _sinc(u: NDArray[np.float64]) -> NDArray[np.float64]:
    small = np.abs(u) < _SINC_SERIES_LIMIT
    safe = np.where(small, 1.0, u)
    return np.where(small, 1.0 - u * u / 6.0, np.sin(safe) / safe)


def radiation_intensity(
    geometry: ModelGeometry, theta: ArrayLike, phi: ArrayLike
) -> Union[float, NDArray[np.float64]]:
    """Normalized radiation intensity of the two-slot model.

    F = sinc²((k0 W / 2) sinθ sinφ) · cos²((k0 Le / 2) sinθ cosφ)
    · (1 − sin²θ cos²φ) above the ground plane (θ ≤ 90°) and zero below.

    Accepts scalars or broadcastable arrays; scalars return a `float`.
    """
    t = np.asarray(theta, dtype=float)
    p = np.asarray(phi, dtype=float)
    sin_t = np.sin(t)
    sin_p = np.sin(p)
    cos_p = np.cos(p)
    k0 = geometry.wave_number
    array_factor = np.cos(k0 * geometry.effective_length / 2 * sin_t * cos_p)
    slot_factor = _sinc(k0 * geometry.width / 2 * sin_t * sin_p)
    element = 1.0 - (sin_t * cos_p) ** 2
    value = slot_factor**2 * array_factor**2 * element
    value = np.where(t > math.pi / 2 + _HORIZON_ATOL, 0.0, value)
    value = np.clip(value, 0.0, 1.0)
    if value.ndim == 0:
        return float(value)
    return value


def sample_pattern(
    spec: AntennaSpec,
    ntheta: Optional[int] = None,
    nphi: Optional[int] = None,
) -> RadiationPattern:
    """Sample the normalized pattern of a spec over the full sphere.

    Samples below the ground plane are explicit zeros. When the grid has a
    row exactly on the horizon (odd Nθ), that row holds the mean of the
    limits from above and below the ground plane, which keeps the θ
    quadrature second order across the jump.
    """
    geometry = model_geometry(spec)
    theta, phi = pattern_grid(ntheta, nphi)
    theta_grid, phi_grid = np.meshgrid(theta, phi, indexing="ij")
    values = np.asarray(radiation_intensity(geometry, theta_grid, phi_grid))
    if (theta.size - 1) % 2 == 0:
        horizon = (theta.size - 1) // 2
        values[horizon, :] = 0.5 * np.asarray(
            radiation_intensity(geometry, math.pi / 2, phi)
        )
    logger.debug(
        "Sampled pattern",
        spec=spec.name,
        ntheta=theta.size,
        nphi=phi.size,
    )
    return RadiationPattern.from_intensity(theta, phi, values)


def cut_angles() -> NDArray[np.float64]:
    """Cut sample angles, −90° to +90° in `CUT_STEP_DEG` steps."""
    count = int(round(2 * _CUT_LIMIT_DEG / CUT_STEP_DEG)) + 1
    return -_CUT_LIMIT_DEG + np.arange(count) * CUT_STEP_DEG


def pattern_cut(
    spec: AntennaSpec,
    plane: Plane,
    *,
    pattern: Optional[RadiationPattern] = None,
    ntheta: Optional[int] = None,
    nphi: Optional[int] = None,
) -> PatternCut:
    """Realized-gain cut of a spec along a principal plane.

    The gain is e0 · D · F(θ, φ_plane), with F from the closed-form model,
    D from ``pattern`` (sampled from the spec when not given) and e0 from
    the spec's efficiency chain.
    """
    if pattern is None:
        pattern = sample_pattern(spec, ntheta, nphi)
    geometry = model_geometry(spec)
    peak_gain = antenna_efficiency(spec).e0 * directivity(pattern)
    angles = cut_angles()
    phi = np.where(angles < 0, plane.phi + math.pi, plane.phi)
    intensity = np.asarray(
        radiation_intensity(geometry, np.radians(np.abs(angles)), phi)
    )
    return PatternCut(
        plane=plane,
        theta_deg=tuple(float(a) for a in angles),
        gain_dbi=tuple(to_dbi(peak_gain * float(f)) for f in intensity),
    )


def gain_delta(
    cut: PatternCut, angle_a: float = 30.0, angle_b: float = 90.0
) -> float:
    """Difference in gain between two sampled angles of a cut (dB).

    No interpolation is done: both angles must be samples of the cut.
    """
    return cut.gain_at(angle_a) - cut.gain_at(angle_b)
