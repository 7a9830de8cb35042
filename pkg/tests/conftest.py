import warnings

import pytest

from loopfront.builder import Grid, dalembert_solve
from loopfront.cauchy import jet_to_potential
from loopfront.jets import JetCoeffs

EXAMPLE_JETS = {
    "CuspidalEdge": (1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0),
    "Swallowtail": (1, 1, 0, 1, 2, 0, 1, 0, 0, 1, 1, 0),
    "CuspidalButterfly": (1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 0, 0),
    "CuspidalLips": (1, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1),
    "CuspidalBeaks": (1, 0, 1, 3, 0, 0, 1, 0, 0, 3, 0, -1),
}

_cache = {}


def example_surface(label, n=101):
    key = (label, n)
    if key not in _cache:
        c = JetCoeffs.from_table(EXAMPLE_JETS[label])
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            _cache[key] = dalembert_solve(jet_to_potential(c), Grid.rect(-0.5, 0.5, n))
    return _cache[key]


@pytest.fixture(scope="session")
def example_jets():
    return EXAMPLE_JETS


@pytest.fixture(scope="session")
def surface():
    return example_surface


# acceptance lines, printed once at the end of the run
ACCEPTANCE = {}


def record(n, ok, detail):
    ACCEPTANCE[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(ACCEPTANCE[n])
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
