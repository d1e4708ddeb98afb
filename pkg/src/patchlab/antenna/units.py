"""Unit normalization between document units and SI.

Document values are decimals. Scaling between document units and SI is a
shift of the decimal point, done in `decimal.Decimal`, so a value is
rounded to a float exactly once. Writing ``repr(x)`` of an SI float
shifted into document units and reading it back therefore reproduces
``x`` bit for bit.
"""

from __future__ import annotations

from decimal import Decimal
from enum import Enum
from typing import Union

from patchlab.exceptions import SpecValidationError

__all__ = ["Unit", "normalize_quantity", "denormalize_quantity"]


class Unit(str, Enum):
    """Units accepted at the document boundary."""

    mm = "mm"

    m = "m"

    GHz = "GHz"

    MHz = "MHz"

    Hz = "Hz"

    ohm = "ohm"

    @property
    def exponent(self) -> int:
        """Power of ten that converts a value in this unit to SI."""
        return _EXPONENTS.get(self, 0)


_EXPONENTS = {Unit.mm: -3, Unit.GHz: 9, Unit.MHz: 6}


def _as_unit(unit: Union[Unit, str]) -> Unit:
    try:
        return Unit(unit)
    except ValueError:
        raise SpecValidationError("unit", f"unknown unit {unit!r}")


def _as_decimal(value: Union[float, Decimal]) -> Decimal:
    if isinstance(value, Decimal):
        exact = value
    else:
        # Shortest repr, which reads back as the same float.
        exact = Decimal(repr(float(value)))
    if not exact.is_finite():
        raise SpecValidationError("value", f"must be finite, got {value!r}")
    return exact


def normalize_quantity(
    value: Union[float, Decimal], unit: Union[Unit, str]
) -> float:
    """Convert a value in a document unit to SI.

    Parameters
    ----------
    value : `float` or `decimal.Decimal`
        The value, finite. Floats are taken at their shortest decimal
        representation.
    unit : `Unit` or `str`
        One of ``mm``, ``m``, ``GHz``, ``MHz``, ``Hz`` or ``ohm``.

    Returns
    -------
    `float`
        The value in metres, hertz or ohms, correctly rounded from the
        exact decimal product.

    Raises
    ------
    patchlab.exceptions.SpecValidationError
        Raised if the unit is unknown or the value is not finite.
    """
    u = _as_unit(unit)
    return float(_as_decimal(value).scaleb(u.exponent))


def denormalize_quantity(value: float, unit: Union[Unit, str]) -> Decimal:
    """Convert an SI value to a document unit.

    The result is exact: ``normalize_quantity(denormalize_quantity(x, u),
    u) == x`` for every finite float ``x``. Callers that need a float for
    display convert it with ``float()``.
    """
    u = _as_unit(unit)
    return _as_decimal(value).scaleb(-u.exponent)
