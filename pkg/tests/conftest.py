import pytest

from rbdesign import catalog_entry, delta_design, gamma_design


@pytest.fixture(scope="session")
def theta8():
    return catalog_entry("theta-8").design


@pytest.fixture(scope="session")
def theta4():
    return catalog_entry("theta-4").design


@pytest.fixture(scope="session")
def gamma_rc_8():
    return gamma_design(8, "RC")


@pytest.fixture(scope="session")
def delta_rc_8():
    return delta_design(8, "RC")


@pytest.fixture(scope="session")
def lattice():
    """The rows+columns square lattice (two replicates)."""
    return gamma_design(2, "RC")
