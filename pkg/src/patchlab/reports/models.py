"""Output document models.

Lengths are echoed in millimetres, frequencies in gigahertz and gains in
dB, matching the units of spec documents.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

from patchlab.antenna.units import Unit, denormalize_quantity
from patchlab.radiometry import EfficiencyBreakdown, Impedance
from patchlab.synthesis import DesignResult, guided_wavelength, wavelength

__all__ = [
    "DesignDocument",
    "ImpedanceModel",
    "EfficiencyModel",
    "AntennaMetrics",
    "MetricDeltas",
    "ComparisonReport",
]


def _mm(value: float) -> float:
    return float(denormalize_quantity(value, Unit.mm))


class DesignDocument(BaseModel):
    """Outputs of the design equations for one target frequency."""

    frequency_ghz: float = Field(title="Target resonant frequency (GHz)")

    relative_permittivity: float = Field(title="Substrate εr")

    height_mm: float = Field(title="Substrate thickness (mm)")

    width_mm: float = Field(title="Patch width W (mm)")

    effective_permittivity: float = Field(title="Effective permittivity")

    length_extension_mm: float = Field(
        title="Fringing length extension ΔL (mm)",
        description="Applied at each of the two radiating edges.",
    )

    length_mm: float = Field(title="Physical patch length L (mm)")

    effective_length_mm: float = Field(title="Electrical length L + 2ΔL (mm)")

    wavelength_mm: float = Field(title="Free-space wavelength (mm)")

    guided_wavelength_mm: float = Field(
        title="Guided wavelength λ0 / √ε_eff (mm)",
        description="Twice the electrical length L + 2ΔL.",
    )

    length_to_wavelength: float = Field(
        title="Resonant length ratio L / λ0"
    )

    @classmethod
    def from_design_result(
        cls, result: DesignResult, relative_permittivity: float, height: float
    ) -> DesignDocument:
        """Create a design document from a synthesis result.

        Parameters
        ----------
        result : `patchlab.synthesis.DesignResult`
            The synthesis output.
        relative_permittivity : `float`
            The εr the design was synthesized for.
        height : `float`
            The substrate thickness the design was synthesized for (m).
        """
        lambda0 = wavelength(result.target_frequency)
        return cls(
            frequency_ghz=float(
                denormalize_quantity(result.target_frequency.hertz, Unit.GHz)
            ),
            relative_permittivity=relative_permittivity,
            height_mm=_mm(height),
            width_mm=_mm(result.width),
            effective_permittivity=result.effective_permittivity,
            length_extension_mm=_mm(result.length_extension),
            length_mm=_mm(result.length),
            effective_length_mm=_mm(result.effective_length),
            wavelength_mm=_mm(lambda0),
            guided_wavelength_mm=_mm(
                guided_wavelength(
                    result.target_frequency, result.effective_permittivity
                )
            ),
            length_to_wavelength=result.length / lambda0,
        )


class ImpedanceModel(BaseModel):
    """A complex impedance."""

    resistance_ohm: float

    reactance_ohm: float

    @classmethod
    def from_impedance(cls, impedance: Impedance) -> ImpedanceModel:
        return cls(
            resistance_ohm=impedance.resistance,
            reactance_ohm=impedance.reactance,
        )


class EfficiencyModel(BaseModel):
    """The efficiency chain and the reflection coefficient behind it."""

    gamma_real: float = Field(title="Re Γ")

    gamma_imag: float = Field(title="Im Γ")

    gamma_magnitude: float = Field(title="|Γ|")

    er: float = Field(title="Reflection (mismatch) efficiency")

    ec: float = Field(title="Conduction efficiency")

    ed: float = Field(title="Dielectric efficiency")

    e0: float = Field(title="Total efficiency")

    @classmethod
    def from_breakdown(cls, breakdown: EfficiencyBreakdown) -> EfficiencyModel:
        return cls(
            gamma_real=breakdown.gamma.real,
            gamma_imag=breakdown.gamma.imag,
            gamma_magnitude=abs(breakdown.gamma),
            er=breakdown.er,
            ec=breakdown.ec,
            ed=breakdown.ed,
            e0=breakdown.e0,
        )


class AntennaMetrics(BaseModel):
    """Figures of merit of one antenna spec."""

    spec_name: str = Field(title="Name of the analysed spec")

    design_echo: DesignDocument = Field(
        title="Design equations at the spec's frequency, εr and h",
        description=(
            "What the design equations would build for this substrate, for "
            "comparison with the as-built patch."
        ),
    )

    resonant_frequency_asbuilt_ghz: float = Field(
        title="Resonant frequency of the as-built patch (GHz)"
    )

    effective_length_mm: float = Field(
        title="Electrical length L + 2ΔL of the as-built patch (mm)"
    )

    permittivity_for_target: Optional[float] = Field(
        title="εr that would make the as-built patch resonate on frequency",
        description="Null if no εr in the search bracket does.",
    )

    directivity_dbi: float = Field(title="Directivity (dBi)")

    efficiency: EfficiencyModel = Field(title="Efficiency chain")

    realized_gain_dbi: float = Field(title="Peak realized gain (dBi)")

    gain_delta_30_90_eplane: float = Field(
        title="E-plane gain at 30° minus gain at 90° (dB)"
    )

    gain_delta_30_90_hplane: float = Field(
        title="H-plane gain at 30° minus gain at 90° (dB)"
    )

    input_impedance: ImpedanceModel = Field(title="Antenna input impedance")

    vswr: Optional[float] = Field(
        title="Voltage standing wave ratio",
        description="Null when the feed reflects all incident power.",
    )

    return_loss_db: float = Field(title="Return loss (dB)")

    footprint_area_mm2: float = Field(title="Patch area L·W (mm²)")

    substrate_volume_mm3: float = Field(title="Substrate volume (mm³)")

    reference_gain_dbi: Optional[float] = Field(
        title="Full-wave reference gain quoted in the spec (dBi)",
        description="Echoed from the spec; never computed.",
    )


class MetricDeltas(BaseModel):
    """Differences antenna A minus antenna B.

    A delta is null when either side of it is null.
    """

    resonant_frequency_asbuilt_ghz: float

    effective_length_mm: float

    permittivity_for_target: Optional[float]

    directivity_dbi: float

    e0: float

    realized_gain_dbi: float

    gain_delta_30_90_eplane: float

    gain_delta_30_90_hplane: float

    vswr: Optional[float]

    return_loss_db: float

    footprint_area_mm2: float

    substrate_volume_mm3: float

    @classmethod
    def between(cls, a: AntennaMetrics, b: AntennaMetrics) -> MetricDeltas:
        """Compute the deltas of two metric blocks."""
        return cls(
            resonant_frequency_asbuilt_ghz=_delta(
                a.resonant_frequency_asbuilt_ghz,
                b.resonant_frequency_asbuilt_ghz,
            ),
            effective_length_mm=_delta(
                a.effective_length_mm, b.effective_length_mm
            ),
            permittivity_for_target=_optional_delta(
                a.permittivity_for_target, b.permittivity_for_target
            ),
            directivity_dbi=_delta(a.directivity_dbi, b.directivity_dbi),
            e0=_delta(a.efficiency.e0, b.efficiency.e0),
            realized_gain_dbi=_delta(a.realized_gain_dbi, b.realized_gain_dbi),
            gain_delta_30_90_eplane=_delta(
                a.gain_delta_30_90_eplane, b.gain_delta_30_90_eplane
            ),
            gain_delta_30_90_hplane=_delta(
                a.gain_delta_30_90_hplane, b.gain_delta_30_90_hplane
            ),
            vswr=_optional_delta(a.vswr, b.vswr),
            return_loss_db=_delta(a.return_loss_db, b.return_loss_db),
            footprint_area_mm2=_delta(
                a.footprint_area_mm2, b.footprint_area_mm2
            ),
            substrate_volume_mm3=_delta(
                a.substrate_volume_mm3, b.substrate_volume_mm3
            ),
        )


def _delta(a: float, b: float) -> float:
    return 0.0 if a == b else a - b


def _optional_delta(a: Optional[float], b: Optional[float]) -> Optional[float]:
    if a is None or b is None:
        return None
    return _delta(a, b)


class ComparisonReport(BaseModel):
    """Side-by-side metrics of two antennas."""

    antenna_a: AntennaMetrics

    antenna_b: AntennaMetrics

    deltas: MetricDeltas = Field(title="Per-metric differences, A minus B")

    higher_gain_delta: str = Field(
        title="Spec with the larger E-plane 30°/90° gain delta",
        description="Ties go to the lexicographically smaller name.",
    )

    annotations: list[str] = Field(
        default_factory=list,
        title="Notes on reference values echoed from the specs",
    )

    @classmethod
    def from_metrics(
        cls, a: AntennaMetrics, b: AntennaMetrics
    ) -> ComparisonReport:
        """Compare two metric blocks."""
        delta_a = a.gain_delta_30_90_eplane
        delta_b = b.gain_delta_30_90_eplane
        if delta_a > delta_b:
            winner = a.spec_name
        elif delta_b > delta_a:
            winner = b.spec_name
        else:
            winner = min(a.spec_name, b.spec_name)
        return cls(
            antenna_a=a,
            antenna_b=b,
            deltas=MetricDeltas.between(a, b),
            higher_gain_delta=winner,
            annotations=[
                _reference_annotation(m)
                for m in (a, b)
                if m.reference_gain_dbi is not None
            ],
        )


def _reference_annotation(metrics: AntennaMetrics) -> str:
    assert metrics.reference_gain_dbi is not None
    return (
        f"{metrics.spec_name}: full-wave reference passive gain "
        f"{metrics.reference_gain_dbi:g} dBi; the closed-form two-slot "
        "model does not reproduce this value"
    )
