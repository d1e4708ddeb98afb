"""Rectangular patch design equations.

The chain is: width from the target frequency and dielectric constant,
then the effective permittivity seen by the fringing fields, the fringing
length extension, and finally the physical length. `resonant_frequency`
runs the chain backwards for an as-built patch and `invert_permittivity`
solves it for the dielectric constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import scipy.optimize
import structlog

from patchlab.antenna.models import PHYSICAL_CONSTANTS, Frequency
from patchlab.config import config
from patchlab.exceptions import (
    DomainError,
    InfeasibleDesignError,
    NoSolutionError,
    NumericalError,
    SingularityError,
)

__all__ = [
    "DesignResult",
    "PERMITTIVITY_BRACKET",
    "wavelength",
    "guided_wavelength",
    "patch_width",
    "effective_permittivity",
    "length_extension",
    "patch_length",
    "resonant_frequency",
    "invert_permittivity",
]

PERMITTIVITY_BRACKET = (1.0, 100.0)
"""Dielectric constants searched by `invert_permittivity`."""

_MAX_BISECTIONS = 200

_FREQUENCY_RTOL = 1e-9

logger = structlog.get_logger(config.logger_name)


@dataclass(frozen=True)
class DesignResult:
    """Outputs of the design equations for one target frequency."""

    width: float
    """Patch width W (m)."""

    effective_permittivity: float
    """Effective dielectric constant ε_eff."""

    length_extension: float
    """Fringing length extension ΔL (m), applied at each radiating edge."""

    length: float
    """Physical patch length L (m)."""

    target_frequency: Frequency

    @property
    def effective_length(self) -> float:
        """Electrical length L + 2ΔL (m)."""
        return self.length + 2 * self.length_extension


def _check_permittivity(relative_permittivity: float) -> None:
    if not (
        math.isfinite(relative_permittivity) and relative_permittivity >= 1
    ):
        raise DomainError(
            "Relative permittivity must be at least 1, got "
            f"{relative_permittivity!r}"
        )


def _check_height(height: float) -> None:
    if not (math.isfinite(height) and height >= 0):
        raise DomainError(
            f"Substrate height must be non-negative, got {height!r}"
        )


def _check_width(width: float) -> None:
    if not (math.isfinite(width) and width > 0):
        raise DomainError(f"Patch width must be positive, got {width!r}")


def wavelength(frequency: Frequency) -> float:
    """Free-space wavelength c0/f (m)."""
    return PHYSICAL_CONSTANTS.c0 / frequency.hertz


def guided_wavelength(
    frequency: Frequency, effective_permittivity: float
) -> float:
    """Wavelength in a medium of the given effective permittivity (m)."""
    if not effective_permittivity > 0:
        raise DomainError(
            "Effective permittivity must be positive, got "
            f"{effective_permittivity!r}"
        )
    return wavelength(frequency) / math.sqrt(effective_permittivity)


def patch_width(frequency: Frequency, relative_permittivity: float) -> float:
    """Patch width for efficient radiation at the target frequency.

    Parameters
    ----------
    frequency : `patchlab.antenna.models.Frequency`
        Target resonant frequency.
    relative_permittivity : `float`
        Substrate dielectric constant εr, at least 1.

    Returns
    -------
    `float`
        W = c0 / (2 fr) · sqrt(2 / (εr + 1)), in metres.

    Raises
    ------
    patchlab.exceptions.DomainError
        Raised if εr < 1.
    """
    _check_permittivity(relative_permittivity)
    return (
        PHYSICAL_CONSTANTS.c0
        / (2 * frequency.hertz)
        * math.sqrt(2 / (relative_permittivity + 1))
    )


def effective_permittivity(
    relative_permittivity: float, height: float, width: float
) -> float:
    """Effective dielectric constant of a patch of the given width.

    ε_eff = (εr + 1)/2 + (εr − 1)/2 · (1 + 12 h/W)^(−1/2); it lies in
    [1, εr] and tends to εr as h → 0.
    """
    _check_permittivity(relative_permittivity)
    _check_height(height)
    _check_width(width)
    er = relative_permittivity
    return (er + 1) / 2 + (er - 1) / 2 / math.sqrt(1 + 12 * height / width)


def length_extension(
    height: float, width: float, effective_permittivity: float
) -> float:
    """Fringing length extension ΔL of one radiating edge (m).

    Raises
    ------
    patchlab.exceptions.SingularityError
        Raised if ε_eff ≤ 0.258, where the expression has its pole.
    """
    _check_height(height)
    _check_width(width)
    if not effective_permittivity > 0.258:
        raise SingularityError(
            "Length extension is singular for effective permittivity "
            f"{effective_permittivity!r} (must exceed 0.258)"
        )
    if height == 0:
        return 0.0
    eeff = effective_permittivity
    ratio = width / height
    return (
        0.412
        * height
        * (eeff + 0.3)
        * (ratio + 0.264)
        / ((eeff - 0.258) * (ratio + 0.8))
    )


def patch_length(
    frequency: Frequency, relative_permittivity: float, height: float
) -> DesignResult:
    """Synthesize a patch for a target frequency.

    Parameters
    ----------
    frequency : `patchlab.antenna.models.Frequency`
        Target resonant frequency.
    relative_permittivity : `float`
        Substrate dielectric constant εr.
    height : `float`
        Substrate thickness h (m).

    Returns
    -------
    `DesignResult`
        W, ε_eff, ΔL and L = c0 / (2 fr sqrt(ε_eff)) − 2ΔL.

    Raises
    ------
    patchlab.exceptions.InfeasibleDesignError
        Raised if the resulting length is not positive. The intermediate
        values are attached to the exception.
    """
    width = patch_width(frequency, relative_permittivity)
    eeff = effective_permittivity(relative_permittivity, height, width)
    delta_l = length_extension(height, width, eeff)
    length = (
        PHYSICAL_CONSTANTS.c0 / (2 * frequency.hertz * math.sqrt(eeff))
        - 2 * delta_l
    )
    result = DesignResult(
        width=width,
        effective_permittivity=eeff,
        length_extension=delta_l,
        length=length,
        target_frequency=frequency,
    )
    if not length > 0:
        raise InfeasibleDesignError(
            f"Design is infeasible: L = {length!r} m (W = {width!r} m, "
            f"eps_eff = {eeff!r}, delta_L = {delta_l!r} m)",
            design=result,
        )
    logger.debug(
        "Synthesized patch",
        frequency_hz=frequency.hertz,
        relative_permittivity=relative_permittivity,
        height_m=height,
        width_m=width,
        length_m=length,
    )
    return result


def resonant_frequency(
    length: float, width: float, height: float, relative_permittivity: float
) -> Frequency:
    """Estimate the resonant frequency of an as-built patch.

    The effective permittivity and length extension are computed for the
    given width, not for a resynthesized one, so measured patches can be
    analysed as they are.

    Returns
    -------
    `patchlab.antenna.models.Frequency`
        fr = c0 / (2 (L + 2ΔL) sqrt(ε_eff)).
    """
    if not (math.isfinite(length) and length > 0):
        raise DomainError(f"Patch length must be positive, got {length!r}")
    eeff = effective_permittivity(relative_permittivity, height, width)
    delta_l = length_extension(height, width, eeff)
    return Frequency(
        PHYSICAL_CONSTANTS.c0 / (2 * (length + 2 * delta_l) * math.sqrt(eeff))
    )


def invert_permittivity(
    length: float, width: float, height: float, target: Frequency
) -> float:
    """Find the dielectric constant that makes a patch resonate at a target
    frequency.

    The resonant frequency decreases monotonically with εr, so the root is
    found by bisection over `PERMITTIVITY_BRACKET`.

    Returns
    -------
    `float`
        εr such that the resonant frequency matches the target within 1e-9
        relative.

    Raises
    ------
    patchlab.exceptions.NoSolutionError
        Raised if the target is not bracketed by the resonant frequencies
        at the two ends of the bracket.
    """
    er_low, er_high = PERMITTIVITY_BRACKET
    f_low = resonant_frequency(length, width, height, er_low).hertz
    f_high = resonant_frequency(length, width, height, er_high).hertz
    if not (f_high <= target.hertz <= f_low):
        raise NoSolutionError(
            f"Target {target.hertz!r} Hz is outside the resonant range "
            f"[{f_high!r}, {f_low!r}] Hz for permittivity {er_low:g} to "
            f"{er_high:g}",
            bracket_frequencies=(f_low, f_high),
        )
    if target.hertz == f_low:
        return er_low
    if target.hertz == f_high:
        return er_high

    def mismatch(er: float) -> float:
        f = resonant_frequency(length, width, height, er).hertz
        return (f - target.hertz) / target.hertz

    root, info = scipy.optimize.bisect(
        mismatch,
        er_low,
        er_high,
        xtol=1e-12,
        maxiter=_MAX_BISECTIONS,
        full_output=True,
    )
    if abs(mismatch(root)) > _FREQUENCY_RTOL:
        raise NumericalError(
            f"Permittivity search did not converge (last estimate {root!r})"
        )
    logger.debug(
        "Inverted permittivity",
        target_hz=target.hertz,
        relative_permittivity=root,
        iterations=info.iterations,
    )
    return float(root)
