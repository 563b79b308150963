import pytest

from gaugeqec.catalog import catalog
from gaugeqec.search import SweepSpec, find_gauge_symmetries, sweep_nonexistence


@pytest.fixture(scope="session")
def shor9_gauge_search():
    """The expensive positive search, shared by module and acceptance tests."""
    return find_gauge_symmetries(catalog("shor9"), 3)


@pytest.fixture(scope="session")
def sweep_5113():
    return sweep_nonexistence(SweepSpec(5, 1, 1, 3))


@pytest.fixture(scope="session")
def sweep_5103():
    return sweep_nonexistence(SweepSpec(5, 1, 0, 3))
