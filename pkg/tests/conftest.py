from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

from offshoot.model import example1, make_problem

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def ex1():
    return example1()


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def conflict3():
    """x1 + x2 <= 1 over three binaries."""
    return make_problem([0, 0, 0], [({0: 1, 1: 1}, "<=", 1)], [0, 0, 0], [1, 1, 1], [True] * 3,
                        name="conflict3")


def box(lp, **fix):
    lower, upper = lp.lower.copy(), lp.upper.copy()
    for name, v in fix.items():
        j = int(name[1:]) - 1
        lower[j] = upper[j] = v
    return lower, upper


def random_lp_arrays(rng, n, m, free_frac=0.0):
    from offshoot.lp import LpModel
    A = rng.integers(-6, 7, size=(m, n)).astype(float)
    c = rng.integers(-8, 9, size=n).astype(float)
    lower = np.zeros(n)
    upper = rng.integers(1, 5, size=n).astype(float)
    x0 = rng.uniform(lower, upper)
    b = A @ x0 + rng.uniform(-4, 4, size=m)
    b = np.round(b)
    return LpModel(c, A, b, lower, upper)


_acceptance_lines = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_acceptance_lines] = []


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for the end-of-run acceptance summary."""
    lines = request.config.stash[_acceptance_lines]

    def report(name, ok, detail):
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_acceptance_lines, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
