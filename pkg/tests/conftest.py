import pytest

from semifields import build_field


@pytest.fixture(scope="session")
def F27():
    return build_field(3, 3)


@pytest.fixture(scope="session")
def F16():
    return build_field(2, 4, [1, 1, 0, 0, 1])


@pytest.fixture(scope="session")
def F9():
    return build_field(3, 2)
