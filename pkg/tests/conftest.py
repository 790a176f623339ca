import pytest

from twocat.corpus import corpus


@pytest.fixture(scope="session")
def cx():
    return corpus()
