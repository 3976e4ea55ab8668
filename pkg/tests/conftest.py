import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lieqr import build_algebra  # noqa: E402


@functools.lru_cache(maxsize=None)
def algebra(series, rank):
    return build_algebra(series, rank)


@pytest.fixture
def A1():
    return algebra("A", 1)


@pytest.fixture
def A2():
    return algebra("A", 2)


@pytest.fixture
def A3():
    return algebra("A", 3)


@pytest.fixture
def D4():
    return algebra("D", 4)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
