import pytest

from qxopt import build_table, builtin


@pytest.fixture(scope="session")
def qx2_table():
    return build_table(builtin("qx2"))


@pytest.fixture(scope="session")
def qx4_table():
    return build_table(builtin("qx4"))
