import pytest

from visaction.exact import ExactMatrix, gr


@pytest.fixture(scope="session")
def su2_basis():
    return [
        ExactMatrix.from_rows([[gr(0, 1), gr(0)], [gr(0), gr(0, -1)]]),
        ExactMatrix.from_rows([[gr(0), gr(1)], [gr(-1), gr(0)]]),
        ExactMatrix.from_rows([[gr(0), gr(0, 1)], [gr(0, 1), gr(0)]]),
    ]


@pytest.fixture(scope="session")
def su2(su2_basis):
    from visaction.liealg import make_algebra
    return make_algebra(su2_basis, "su(2)")


@pytest.fixture(scope="session")
def su21():
    from visaction.families import build
    return build("su", 2, 1)


@pytest.fixture(scope="session")
def sp2():
    from visaction.families import build
    return build("sp_R", 2)
