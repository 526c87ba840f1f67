import pytest

from wreath_growth import Field, GeneratingSequence, PolynomialAlgebra, WreathProduct


@pytest.fixture(scope="session")
def F2():
    return Field.gf(2)


@pytest.fixture(scope="session")
def F2x(F2):
    return PolynomialAlgebra(F2, ["x"])


@pytest.fixture(scope="session")
def F2xy(F2):
    return PolynomialAlgebra(F2, ["x", "y"])


@pytest.fixture(scope="session")
def seq_x(F2x):
    """c = (x, 0, 0, ...)"""
    return GeneratingSequence(F2x, {1: F2x.gen("x")})


@pytest.fixture(scope="session")
def seq_triangular(F2x):
    """a_{k(k+1)/2} = x^k: infinite support with strictly increasing gaps."""
    x = F2x.gen("x")
    return GeneratingSequence(F2x, positions=lambda k: k * (k + 1) // 2,
                              elements=lambda k: x ** k, horizon=400, gap_mode=True)


@pytest.fixture(scope="session")
def W_x(F2x, seq_x):
    return WreathProduct(F2x, seq_x)


@pytest.fixture(scope="session")
def W_inf(F2x, seq_triangular):
    return WreathProduct(F2x, seq_triangular)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
