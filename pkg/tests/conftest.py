import pytest

from bck import enumerate_algebras


@pytest.fixture(scope="session")
def catalog3():
    return enumerate_algebras(3)


@pytest.fixture(scope="session")
def catalog4():
    return enumerate_algebras(4)


@pytest.fixture(scope="session")
def catalog5():
    return enumerate_algebras(5)


@pytest.fixture(scope="session")
def small_catalogs(catalog3, catalog4, catalog5):
    """Catalogs for orders 1 through 5, keyed by order."""
    return {
        1: enumerate_algebras(1),
        2: enumerate_algebras(2),
        3: catalog3,
        4: catalog4,
        5: catalog5,
    }
