"""Support for reading and writing antenna spec documents.

A spec document is a single JSON (or YAML) object. Lengths are given in
millimetres, frequencies in gigahertz (bands in megahertz) and impedances
in ohms; everything is converted to SI on load.

Numbers are read and written as exact decimals, so saving a spec and
loading it back reproduces every float.
"""

from __future__ import annotations

import json
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Any, Optional, Union

import yaml
from pydantic import BaseModel, Extra, ValidationError, validator
from pydantic.fields import ModelField

from patchlab.config import config
from patchlab.exceptions import (
    InputError,
    MalformedSpecError,
    SpecValidationError,
)

from .models import (
    AntennaSpec,
    FeedSpec,
    Frequency,
    FrequencyBand,
    GroundPlaneSpec,
    PatchSpec,
    SourceSpec,
    SubstrateSpec,
)
from .units import Unit, denormalize_quantity, normalize_quantity

__all__ = [
    "SpecDocument",
    "load_antenna_spec",
    "save_antenna_spec",
    "read_antenna_spec",
    "write_antenna_spec",
]

_DOCUMENT_KEYS = {
    "frequency": "frequency_ghz",
    "band": "band_mhz",
    "patch": "patch_mm",
    "patch.length": "patch_mm.length",
    "patch.width": "patch_mm.width",
    "substrate.length": "substrate_mm.length",
    "substrate.width": "substrate_mm.width",
    "substrate.height": "substrate_mm.height",
    "ground": "ground_mm",
    "ground.length": "ground_mm.length",
    "ground.width": "ground_mm.width",
    "feed.length": "feed.length_mm",
    "feed.rr": "feed.rr_ohm",
    "feed.rl": "feed.rl_ohm",
    "feed.xa": "feed.xa_ohm",
    "source.rg": "source.rg_ohm",
    "source.xg": "source.xg_ohm",
    "source.z0": "source.z0_ohm",
    "mesh_wire_radius": "mesh_wire_radius_mm",
}
"""Spec type field names that differ from their document key."""


class _DecimalLoader(yaml.SafeLoader):
    """A safe YAML loader that reads floats as `decimal.Decimal`."""


def _construct_decimal(
    loader: yaml.SafeLoader, node: yaml.Node
) -> Union[Decimal, float]:
    assert isinstance(node, yaml.ScalarNode)
    text = str(loader.construct_scalar(node)).replace("_", "")
    try:
        return Decimal(text)
    except InvalidOperation:
        # .inf, .nan and sexagesimal forms
        return loader.construct_yaml_float(node)


_DecimalLoader.add_constructor("tag:yaml.org,2002:float", _construct_decimal)


def _mm(value: float) -> Decimal:
    return denormalize_quantity(value, Unit.mm)


def _exact(value: float) -> Decimal:
    return Decimal(repr(float(value)))


def _optional(value: Optional[float]) -> Optional[Decimal]:
    return None if value is None else _exact(value)


def _float(value: Optional[Decimal]) -> Optional[float]:
    return None if value is None else float(value)


def _frequency(value: Decimal, unit: Unit, key: str) -> Frequency:
    try:
        return Frequency(normalize_quantity(value, unit))
    except SpecValidationError as e:
        raise SpecValidationError(key, e.reason) from e


class _DocumentModel(BaseModel):
    class Config:
        extra = Extra.forbid

    @validator("*", pre=True)
    def check_number(cls, v: Any, field: ModelField) -> Any:
        # Pydantic would otherwise coerce strings and booleans.
        if field.type_ is Decimal and isinstance(v, (bool, str)):
            raise TypeError("value is not a number")
        return v


class RectangleMm(_DocumentModel):
    """A length × width pair in millimetres."""

    length: Decimal

    width: Decimal


class SubstrateMm(_DocumentModel):
    """Substrate dimensions in millimetres."""

    length: Decimal

    width: Decimal

    height: Decimal


class BandMhz(_DocumentModel):
    """An operating band in megahertz."""

    low: Decimal

    high: Decimal


class FeedDocument(_DocumentModel):
    """The ``feed`` object."""

    length_mm: Decimal

    rr_ohm: Decimal

    rl_ohm: Decimal

    xa_ohm: Decimal


class SourceDocument(_DocumentModel):
    """The ``source`` object."""

    rg_ohm: Decimal

    xg_ohm: Decimal

    z0_ohm: Optional[Decimal] = None
    """Reference impedance; `patchlab.config.Config.reference_impedance`
    applies when omitted.
    """


class SpecDocument(_DocumentModel):
    """A Pydantic model of the spec document schema."""

    name: str

    description: Optional[str] = None

    frequency_ghz: Decimal

    band_mhz: Optional[BandMhz] = None

    patch_mm: RectangleMm

    substrate_mm: SubstrateMm

    relative_permittivity: Decimal
    """Dielectric constant εr, dimensionless."""

    loss_tangent: Optional[Decimal] = None
    """Loss tangent as quoted for the material; metadata only."""

    ground_mm: RectangleMm

    feed: FeedDocument

    source: SourceDocument

    ec: Optional[Decimal] = None

    ed: Optional[Decimal] = None

    mesh_wire_radius_mm: Optional[Decimal] = None
    """Solver mesh wire radius; metadata only."""

    reference_gain_dbi: Optional[Decimal] = None
    """Full-wave passive gain quoted for the antenna; metadata only."""

    def to_antenna_spec(self) -> AntennaSpec:
        """Export an `AntennaSpec` in SI units.

        Raises
        ------
        patchlab.exceptions.SpecValidationError
            Raised if a value violates an invariant of the spec types. The
            ``field`` attribute names the document key.
        """
        try:
            return self._to_antenna_spec()
        except SpecValidationError as e:
            key = _DOCUMENT_KEYS.get(e.field, e.field)
            if key == e.field:
                raise
            raise SpecValidationError(key, e.reason) from e

    def _to_antenna_spec(self) -> AntennaSpec:
        band = None
        if self.band_mhz is not None:
            band = FrequencyBand(
                low=_frequency(self.band_mhz.low, Unit.MHz, "band_mhz.low"),
                high=_frequency(
                    self.band_mhz.high, Unit.MHz, "band_mhz.high"
                ),
            )
        mesh_wire_radius = None
        if self.mesh_wire_radius_mm is not None:
            mesh_wire_radius = normalize_quantity(
                self.mesh_wire_radius_mm, Unit.mm
            )
        z0 = (
            float(self.source.z0_ohm)
            if self.source.z0_ohm is not None
            else config.reference_impedance
        )
        return AntennaSpec(
            name=self.name,
            description=self.description,
            operating_frequency=_frequency(
                self.frequency_ghz, Unit.GHz, "frequency_ghz"
            ),
            patch=PatchSpec(
                length=normalize_quantity(self.patch_mm.length, Unit.mm),
                width=normalize_quantity(self.patch_mm.width, Unit.mm),
            ),
            substrate=SubstrateSpec(
                length=normalize_quantity(self.substrate_mm.length, Unit.mm),
                width=normalize_quantity(self.substrate_mm.width, Unit.mm),
                height=normalize_quantity(self.substrate_mm.height, Unit.mm),
                relative_permittivity=float(self.relative_permittivity),
                loss_tangent_metadata=_float(self.loss_tangent),
            ),
            ground=GroundPlaneSpec(
                length=normalize_quantity(self.ground_mm.length, Unit.mm),
                width=normalize_quantity(self.ground_mm.width, Unit.mm),
            ),
            feed=FeedSpec(
                feed_length=normalize_quantity(self.feed.length_mm, Unit.mm),
                radiation_resistance=float(self.feed.rr_ohm),
                loss_resistance=float(self.feed.rl_ohm),
                reactance=float(self.feed.xa_ohm),
            ),
            source=SourceSpec(
                resistance=float(self.source.rg_ohm),
                reactance=float(self.source.xg_ohm),
                reference_impedance=z0,
            ),
            conduction_efficiency=1.0 if self.ec is None else float(self.ec),
            dielectric_efficiency=1.0 if self.ed is None else float(self.ed),
            band=band,
            mesh_wire_radius=mesh_wire_radius,
            reference_gain_dbi=_float(self.reference_gain_dbi),
        )

    @classmethod
    def from_antenna_spec(cls, spec: AntennaSpec) -> SpecDocument:
        """Create a document model from a spec, converting to document
        units.
        """
        band_mhz = None
        if spec.band is not None:
            band_mhz = BandMhz(
                low=denormalize_quantity(spec.band.low.hertz, Unit.MHz),
                high=denormalize_quantity(spec.band.high.hertz, Unit.MHz),
            )
        mesh_wire_radius_mm = None
        if spec.mesh_wire_radius is not None:
            mesh_wire_radius_mm = _mm(spec.mesh_wire_radius)
        return cls(
            name=spec.name,
            description=spec.description,
            frequency_ghz=denormalize_quantity(
                spec.operating_frequency.hertz, Unit.GHz
            ),
            band_mhz=band_mhz,
            patch_mm=RectangleMm(
                length=_mm(spec.patch.length), width=_mm(spec.patch.width)
            ),
            substrate_mm=SubstrateMm(
                length=_mm(spec.substrate.length),
                width=_mm(spec.substrate.width),
                height=_mm(spec.substrate.height),
            ),
            relative_permittivity=_exact(
                spec.substrate.relative_permittivity
            ),
            loss_tangent=_optional(spec.substrate.loss_tangent_metadata),
            ground_mm=RectangleMm(
                length=_mm(spec.ground.length), width=_mm(spec.ground.width)
            ),
            feed=FeedDocument(
                length_mm=_mm(spec.feed.feed_length),
                rr_ohm=_exact(spec.feed.radiation_resistance),
                rl_ohm=_exact(spec.feed.loss_resistance),
                xa_ohm=_exact(spec.feed.reactance),
            ),
            source=SourceDocument(
                rg_ohm=_exact(spec.source.resistance),
                xg_ohm=_exact(spec.source.reactance),
                z0_ohm=_exact(spec.source.reference_impedance),
            ),
            ec=_exact(spec.conduction_efficiency),
            ed=_exact(spec.dielectric_efficiency),
            mesh_wire_radius_mm=mesh_wire_radius_mm,
            reference_gain_dbi=_optional(spec.reference_gain_dbi),
        )


def _format_loc(loc: tuple[Any, ...]) -> str:
    return ".".join(str(part) for part in loc)


def _format_number(number: Decimal) -> str:
    text = format(number.normalize(), "f")
    return text if "." in text else f"{text}.0"


def _encode(value: Any, level: int = 0) -> str:
    """Encode a document as indented JSON with exact decimal numbers."""
    if isinstance(value, dict):
        indent = "  " * (level + 1)
        members = ",\n".join(
            f"{indent}{json.dumps(key)}: {_encode(item, level + 1)}"
            for key, item in value.items()
        )
        return "{\n" + members + "\n" + "  " * level + "}"
    if isinstance(value, Decimal):
        return _format_number(value)
    return json.dumps(value)


def load_antenna_spec(text: str) -> AntennaSpec:
    """Parse a spec document.

    Parameters
    ----------
    text : `str`
        The document, as JSON or YAML.

    Returns
    -------
    `patchlab.antenna.models.AntennaSpec`
        The antenna spec, in SI units.

    Raises
    ------
    patchlab.exceptions.MalformedSpecError
        Raised if the document cannot be parsed or a key is missing,
        unknown or mistyped. The ``key`` attribute names the offending key.
    patchlab.exceptions.SpecValidationError
        Raised if a value violates a spec invariant.
    """
    try:
        data = yaml.load(text, Loader=_DecimalLoader)
    except yaml.YAMLError as e:
        raise MalformedSpecError(f"Spec document is not parseable: {e}")
    if data is None:
        raise MalformedSpecError("Spec document is empty.")
    if not isinstance(data, dict):
        raise MalformedSpecError("Spec document must be a single object.")

    try:
        document = SpecDocument.parse_obj(data)
    except ValidationError as e:
        error = e.errors()[0]
        key = _format_loc(error["loc"])
        raise MalformedSpecError(f"{key}: {error['msg']}", key=key)
    return document.to_antenna_spec()


def save_antenna_spec(spec: AntennaSpec) -> str:
    """Serialize a spec as a JSON spec document.

    Optional metadata that is absent is omitted; ``ec`` and ``ed`` are
    always written.
    """
    document = SpecDocument.from_antenna_spec(spec)
    return _encode(document.dict(exclude_none=True)) + "\n"


def read_antenna_spec(path: Path) -> AntennaSpec:
    """Read and parse a spec document from a file."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"Cannot read spec file {path}: {e}")
    return load_antenna_spec(text)


def write_antenna_spec(spec: AntennaSpec, path: Path) -> None:
    """Write a spec as a JSON document file."""
    try:
        Path(path).write_text(save_antenna_spec(spec))
    except OSError as e:
        raise InputError(f"Cannot write spec file {path}: {e}")
