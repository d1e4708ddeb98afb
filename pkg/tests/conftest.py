"""Pytest fixtures."""

from __future__ import annotations

from pathlib import Path

import pytest

from patchlab.antenna.models import AntennaSpec
from patchlab.antenna.specfile import read_antenna_spec


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory containing the shipped antenna spec files."""
    return Path(__file__).parent.parent.joinpath("fixtures")


@pytest.fixture
def specs_dir() -> Path:
    """Directory containing malformed and invalid spec documents."""
    return Path(__file__).parent.joinpath("data/specs")


@pytest.fixture
def gps_l1_path(fixtures_dir: Path) -> Path:
    return fixtures_dir / "gps_l1.json"


@pytest.fixture
def gps_glonass_path(fixtures_dir: Path) -> Path:
    return fixtures_dir / "gps_glonass.json"


@pytest.fixture
def gps_l1(gps_l1_path: Path) -> AntennaSpec:
    """The GPS L1 reference antenna."""
    return read_antenna_spec(gps_l1_path)


@pytest.fixture
def gps_glonass(gps_glonass_path: Path) -> AntennaSpec:
    """The GPS/GLONASS antenna."""
    return read_antenna_spec(gps_glonass_path)
