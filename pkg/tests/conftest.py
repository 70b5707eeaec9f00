import pytest
from hypothesis import settings

from weil import builtin

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def so3():
    return builtin("so3")


@pytest.fixture(scope="session")
def sl2():
    return builtin("sl2")


@pytest.fixture(scope="session")
def abelian2():
    return builtin("abelian(2)")


@pytest.fixture(scope="session")
def heis3():
    return builtin("heisenberg3")
