import pytest

from holobranch import load_catalog


@pytest.fixture(scope="session")
def cat():
    return load_catalog()
