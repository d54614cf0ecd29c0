import pytest

from tautjac.ideal import RelationIdeal


@pytest.fixture(scope="session")
def ideal_g2():
    return RelationIdeal.build(2, 5)


@pytest.fixture(scope="session")
def ideal_g3():
    return RelationIdeal.build(3, 6)
