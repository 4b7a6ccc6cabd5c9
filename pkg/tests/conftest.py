from datetime import date
from pathlib import Path

import pytest

from droughtcap.fleet import load_fleet

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

SUMMER_START = date(2025, 6, 1)
SUMMER_END = date(2025, 8, 31)


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def registry():
    """The shipped 30-generator synthetic fleet (immutable, shared)."""
    return load_fleet(FIXTURE_DIR / "fleet.csv")
