import pytest

from classpoly import build_root_datum


@pytest.fixture(scope="session")
def sl2():
    return build_root_datum("SL2")


@pytest.fixture(scope="session")
def pgl2():
    return build_root_datum("PGL2")


@pytest.fixture(scope="session")
def sl3():
    return build_root_datum("SL3")


@pytest.fixture(scope="session")
def sp4():
    return build_root_datum("C2")


@pytest.fixture(scope="session")
def gl3():
    return build_root_datum("GL3")
