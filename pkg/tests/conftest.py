import pytest

from cayley_cliques import GraphKind, build_field, make_graph


@pytest.fixture(scope="session")
def gf13():
    return build_field(13, 1)


@pytest.fixture(scope="session")
def gf9():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def gf81():
    return build_field(3, 4)


@pytest.fixture(scope="session")
def gf625():
    return build_field(5, 4)


@pytest.fixture(scope="session")
def gp13_3(gf13):
    return make_graph(gf13, GraphKind.paley(3))


@pytest.fixture(scope="session")
def gpstar81_4(gf81):
    return make_graph(gf81, GraphKind.peisert(4))
