"""Compute antenna metrics and comparisons, and move pattern cuts through
CSV files.
"""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import Optional

import structlog

from patchlab.antenna.models import AntennaSpec
from patchlab.antenna.units import Unit, denormalize_quantity
from patchlab.config import config
from patchlab.exceptions import InputError, NoSolutionError
from patchlab.farfield import (
    PatternCut,
    Plane,
    gain_delta,
    model_geometry,
    pattern_cut,
    sample_pattern,
)
from patchlab.radiometry import (
    antenna_efficiency,
    directivity,
    input_impedance,
    realized_gain,
    return_loss_db,
    to_dbi,
    vswr,
)
from patchlab.synthesis import (
    invert_permittivity,
    patch_length,
    resonant_frequency,
)

from .models import (
    AntennaMetrics,
    ComparisonReport,
    DesignDocument,
    EfficiencyModel,
    ImpedanceModel,
)

__all__ = [
    "CSV_HEADER",
    "compute_metrics",
    "compare_specs",
    "format_cut_csv",
    "write_cut_csv",
    "read_cut_csv",
]

CSV_HEADER = ("theta_deg", "gain_dbi")
"""Header row of pattern-cut CSV files."""

logger = structlog.get_logger(config.logger_name)


def _mm(value: float) -> float:
    return float(denormalize_quantity(value, Unit.mm))


def _finite_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


def compute_metrics(
    spec: AntennaSpec,
    ntheta: Optional[int] = None,
    nphi: Optional[int] = None,
) -> AntennaMetrics:
    """Compute every figure of merit of a spec.

    Parameters
    ----------
    spec : `patchlab.antenna.models.AntennaSpec`
        The antenna to analyse.
    ntheta : `int`, optional
        Polar samples of the pattern quadrature. Defaults to
        ``config.quadrature_ntheta``.
    nphi : `int`, optional
        Azimuth samples of the pattern quadrature. Defaults to
        ``config.quadrature_nphi``.

    Returns
    -------
    `patchlab.reports.models.AntennaMetrics`
        The metrics. The gain deltas use cuts scaled by the directivity of
        the same sampled pattern.

    Raises
    ------
    patchlab.exceptions.NumericalError
        Raised if the design echo is infeasible or the pattern degenerate.
    """
    substrate = spec.substrate
    er = substrate.relative_permittivity
    design = patch_length(spec.operating_frequency, er, substrate.height)
    fr = resonant_frequency(
        spec.patch.length, spec.patch.width, substrate.height, er
    )
    try:
        permittivity: Optional[float] = invert_permittivity(
            spec.patch.length,
            spec.patch.width,
            substrate.height,
            spec.operating_frequency,
        )
    except NoSolutionError as e:
        logger.info("No permittivity for target", spec=spec.name, error=str(e))
        permittivity = None

    pattern = sample_pattern(spec, ntheta, nphi)
    d = directivity(pattern)
    efficiency = antenna_efficiency(spec)
    cuts = {
        plane: pattern_cut(spec, plane, pattern=pattern) for plane in Plane
    }
    gamma = efficiency.gamma

    metrics = AntennaMetrics(
        spec_name=spec.name,
        design_echo=DesignDocument.from_design_result(
            design, er, substrate.height
        ),
        resonant_frequency_asbuilt_ghz=float(
            denormalize_quantity(fr.hertz, Unit.GHz)
        ),
        effective_length_mm=_mm(model_geometry(spec).effective_length),
        permittivity_for_target=permittivity,
        directivity_dbi=to_dbi(d),
        efficiency=EfficiencyModel.from_breakdown(efficiency),
        realized_gain_dbi=to_dbi(realized_gain(d, efficiency.e0)),
        gain_delta_30_90_eplane=gain_delta(cuts[Plane.E]),
        gain_delta_30_90_hplane=gain_delta(cuts[Plane.H]),
        input_impedance=ImpedanceModel.from_impedance(
            input_impedance(spec.feed)
        ),
        vswr=_finite_or_none(vswr(gamma)),
        return_loss_db=return_loss_db(gamma),
        footprint_area_mm2=_mm(spec.patch.length) * _mm(spec.patch.width),
        substrate_volume_mm3=(
            _mm(substrate.length)
            * _mm(substrate.width)
            * _mm(substrate.height)
        ),
        reference_gain_dbi=spec.reference_gain_dbi,
    )
    logger.debug(
        "Computed metrics",
        spec=spec.name,
        directivity_dbi=metrics.directivity_dbi,
        realized_gain_dbi=metrics.realized_gain_dbi,
    )
    return metrics


def compare_specs(
    spec_a: AntennaSpec,
    spec_b: AntennaSpec,
    ntheta: Optional[int] = None,
    nphi: Optional[int] = None,
) -> ComparisonReport:
    """Analyse two specs on the same grid and compare them."""
    return ComparisonReport.from_metrics(
        compute_metrics(spec_a, ntheta, nphi),
        compute_metrics(spec_b, ntheta, nphi),
    )


def _format_angle(angle: float) -> str:
    return f"{angle:g}" if angle.is_integer() else repr(angle)


def format_cut_csv(cut: PatternCut) -> str:
    """Render a cut as CSV text with a ``theta_deg,gain_dbi`` header.

    Gains are written with `repr` so that reading the file back gives the
    same floats.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for theta, gain in zip(cut.theta_deg, cut.gain_dbi):
        writer.writerow((_format_angle(theta), repr(gain)))
    return buffer.getvalue()


def write_cut_csv(cut: PatternCut, path: Path) -> None:
    """Write a cut to a CSV file.

    Raises
    ------
    patchlab.exceptions.InputError
        Raised if the file cannot be written.
    """
    try:
        path.write_text(format_cut_csv(cut))
    except OSError as e:
        raise InputError(f"Cannot write {path}: {e.strerror}") from e


def read_cut_csv(path: Path, plane: Plane) -> PatternCut:
    """Read a cut written by `write_cut_csv`.

    Raises
    ------
    patchlab.exceptions.InputError
        Raised if the file cannot be read or is not a cut file.
    """
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror}") from e
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise InputError(
            f"{path} does not start with the header {','.join(CSV_HEADER)}"
        )
    theta: list[float] = []
    gain: list[float] = []
    for number, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise InputError(f"{path}:{number}: expected 2 columns")
        try:
            theta.append(float(row[0]))
            gain.append(float(row[1]))
        except ValueError as e:
            raise InputError(f"{path}:{number}: {e}") from e
    return PatternCut(
        plane=plane, theta_deg=tuple(theta), gain_dbi=tuple(gain)
    )
