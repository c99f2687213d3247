import pytest

from tracecurves.field import GF2m, irreducible_polys

ACCEPTANCE_RESULTS: dict[str, list[bool]] = {}


def two_moduli(m):
    """Smallest and largest irreducible polynomial of degree m."""
    polys = list(irreducible_polys(m))
    return [polys[0], polys[-1]]


@pytest.fixture(scope="session")
def f8():
    return GF2m(3)


@pytest.fixture(scope="session")
def f64():
    return GF2m(6)


@pytest.fixture(scope="session")
def f128():
    return GF2m(7)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[1])):
        outcomes = ACCEPTANCE_RESULTS[name]
        status = "PASS" if outcomes and all(outcomes) else "FAIL"
        terminalreporter.write_line(f"{name}: {status} ({sum(outcomes)}/{len(outcomes)} runs)")
