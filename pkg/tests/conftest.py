from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from greenseq.quivercore import affine_a, b2, cyclic_a3, kronecker, linear_a
from greenseq.repmod import enumerate_indecomposables

settings.register_profile(
    "repo", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def a2():
    return linear_a(2)


@pytest.fixture(scope="session")
def a3():
    return linear_a(3)


@pytest.fixture(scope="session")
def a2_pool(a2):
    return enumerate_indecomposables(a2)


@pytest.fixture(scope="session")
def a3_pool(a3):
    return enumerate_indecomposables(a3)


@pytest.fixture(scope="session")
def lam1_pool():
    return enumerate_indecomposables(cyclic_a3(1))


@pytest.fixture(scope="session")
def quivers():
    return {
        "A2": linear_a(2),
        "A3": linear_a(3),
        "A4": linear_a(4),
        "Kronecker": kronecker(),
        "A21": affine_a(2, 1),
        "B2": b2(),
    }


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    """Collects one PASS/FAIL line per acceptance criterion; printed in the terminal summary."""
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
