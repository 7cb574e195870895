import pytest

from blueforge import catalog
from blueforge.spectra import spec


@pytest.fixture(scope="session")
def f1():
    return catalog.f1()


@pytest.fixture(scope="session")
def f12():
    return catalog.f1_squared()


@pytest.fixture(scope="session")
def b1():
    return catalog.b1()


@pytest.fixture(scope="session")
def sl2():
    return catalog.sl2_f1()


@pytest.fixture(scope="session")
def sl2_space(sl2):
    return spec(sl2)


@pytest.fixture(scope="session")
def gr24():
    return catalog.grassmannian_f1(2, 4)


@pytest.fixture(scope="session")
def idem():
    return catalog.idempotent_example()
