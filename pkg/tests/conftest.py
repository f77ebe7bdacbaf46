import pytest

from dynqg.instances import build_classical, build_frt_su2, build_su_q2, build_sudq2


@pytest.fixture(scope="session")
def su():
    return build_sudq2()


@pytest.fixture(scope="session")
def classical():
    return build_classical()


@pytest.fixture(scope="session")
def frt():
    return build_frt_su2("2/3")


@pytest.fixture(scope="session")
def suq():
    return build_su_q2("2/3")
