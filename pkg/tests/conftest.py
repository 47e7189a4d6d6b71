import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from relshape.verification import CensusCache  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def vcache():
    """One census cache for the whole session; orders are generated and
    analyzed at most once, with elapsed times recorded for the runtime
    criteria."""
    return CensusCache()


@pytest.fixture(scope="session")
def graphs6(vcache):
    return vcache.graphs(6)


@pytest.fixture(scope="session")
def graphs7(vcache):
    return vcache.graphs(7)


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
