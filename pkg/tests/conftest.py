import pytest

from topeorth.cycles import distinguished_cycle
from topeorth.instances import hypercube_instance
from topeorth.signvec import SignVector

ACCEPTANCE_LINES = []


def record_criterion(number, passed, detail=""):
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def hypercube_with_cycle(n):
    inst = hypercube_instance(n)
    return inst, distinguished_cycle(inst, SignVector.all_plus(n), list(range(1, n + 1)))


@pytest.fixture(scope="session")
def cube():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = hypercube_with_cycle(n)
        return cache[n]

    return get
