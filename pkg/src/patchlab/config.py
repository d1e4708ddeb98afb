"""Configuration for patchlab.

Settings are read from ``PATCHLAB_*`` environment variables into the
`Config` model. The module-level `config` instance is what the rest of
patchlab imports.
"""

from __future__ import annotations

from enum import Enum

from pydantic import BaseSettings, Field, validator

__all__ = ["Config", "Profile", "LogLevel", "config"]


class Profile(str, Enum):
    production = "production"

    development = "development"


class LogLevel(str, Enum):
    DEBUG = "DEBUG"

    INFO = "INFO"

    WARNING = "WARNING"

    ERROR = "ERROR"

    CRITICAL = "CRITICAL"


class Config(BaseSettings):
    profile: Profile = Field(Profile.development, env="PATCHLAB_PROFILE")
    """Logging profile. ``production`` emits JSON log lines."""

    log_level: LogLevel = Field(LogLevel.WARNING, env="PATCHLAB_LOG_LEVEL")
    """Log level. Log records go to standard error."""

    logger_name: str = Field("patchlab", env="PATCHLAB_LOGGER")

    quadrature_ntheta: int = Field(361, env="PATCHLAB_QUADRATURE_NTHETA")
    """Default number of polar samples over [0, π] for pattern quadrature."""

    quadrature_nphi: int = Field(720, env="PATCHLAB_QUADRATURE_NPHI")
    """Default number of azimuth samples over [0, 2π) for pattern
    quadrature.
    """

    reference_impedance: float = Field(
        50.0, env="PATCHLAB_REFERENCE_IMPEDANCE"
    )
    """Reference impedance (ohms) used when a spec document does not set
    ``source.z0_ohm``.
    """

    @validator("quadrature_ntheta")
    def validate_ntheta(cls, v: int) -> int:
        if v < 2:
            raise ValueError(f"At least 2 polar samples are needed: {v}")
        return v

    @validator("quadrature_nphi")
    def validate_nphi(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"At least 1 azimuth sample is needed: {v}")
        return v

    @validator("reference_impedance")
    def validate_reference_impedance(cls, v: float) -> float:
        if not v > 0:
            raise ValueError(f"Reference impedance must be positive: {v}")
        return v


config = Config()
