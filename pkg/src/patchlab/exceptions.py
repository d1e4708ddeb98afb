"""Exceptions raised by patchlab.

Errors split into two families. `InputError` covers anything the caller
can fix by changing the input (the CLI exits with status 2), while
`NumericalError` covers inputs that are well formed but cannot be
evaluated (the CLI exits with status 3).
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .synthesis import DesignResult

__all__ = [
    "PatchlabError",
    "InputError",
    "MalformedSpecError",
    "SpecValidationError",
    "DomainError",
    "OffGridAngleError",
    "NumericalError",
    "InfeasibleDesignError",
    "SingularityError",
    "NoSolutionError",
    "DegeneratePatternError",
]


class PatchlabError(Exception):
    """Base class for patchlab errors."""


class InputError(PatchlabError):
    """An input (document, argument or option) is unusable."""


class MalformedSpecError(InputError):
    """A spec document could not be parsed.

    Parameters
    ----------
    message : `str`
        Description of the problem.
    key : `str`, optional
        Dotted path of the offending key, if one is known.
    """

    def __init__(self, message: str, key: Optional[str] = None) -> None:
        super().__init__(message)
        self.key = key


class SpecValidationError(InputError):
    """A value violates an invariant of an antenna spec type.

    Parameters
    ----------
    field : `str`
        Name of the field that failed validation.
    message : `str`
        Description of the violated invariant.
    """

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field
        self.reason = message


class DomainError(InputError, ValueError):
    """An argument lies outside the domain of an operation."""


class OffGridAngleError(InputError):
    """A requested angle is not a sample of a pattern cut."""


class NumericalError(PatchlabError):
    """A computation cannot produce a meaningful result."""


class InfeasibleDesignError(NumericalError):
    """The design equations produced a non-positive patch length.

    Parameters
    ----------
    message : `str`
        Description of the failure.
    design : `patchlab.synthesis.DesignResult`
        The intermediate values, with the non-positive length.
    """

    def __init__(self, message: str, design: DesignResult) -> None:
        super().__init__(message)
        self.design = design


class SingularityError(NumericalError):
    """A formula was evaluated at a pole."""


class NoSolutionError(NumericalError):
    """A root search target lies outside the search bracket.

    Parameters
    ----------
    message : `str`
        Description of the failure.
    bracket_frequencies : `tuple` of `float`
        Frequencies (Hz) at the two ends of the permittivity bracket.
    """

    def __init__(
        self, message: str, bracket_frequencies: tuple[float, float]
    ) -> None:
        super().__init__(message)
        self.bracket_frequencies = bracket_frequencies


class DegeneratePatternError(NumericalError):
    """A radiation pattern has no radiated power."""
