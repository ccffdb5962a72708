import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from boomtab.field import Field  # noqa: E402
from boomtab.sbox import inverse_sbox  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def fields():
    cache = {}

    def get(n, poly=None):
        key = (n, poly)
        if key not in cache:
            cache[key] = Field(n, poly)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def inv_sbox(fields):
    return lambda n: inverse_sbox(fields(n))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
