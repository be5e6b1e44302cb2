import pytest

from ghostct import bridge, tricat
from ghostct.gen import SHIPPED, shipped


@pytest.fixture(scope="session")
def categories():
    return {name: shipped(name) for name in SHIPPED}


@pytest.fixture(scope="session")
def tiltings(categories):
    return {name: tricat.enumerate_basic(t, "cluster_tilting") for name, t in categories.items()}


@pytest.fixture(scope="session")
def all_reports(categories, tiltings):
    """Every theorem check on every shipped category and cluster tilting object."""
    return {name: bridge.verify_many(t, tiltings[name]) for name, t in categories.items()}
