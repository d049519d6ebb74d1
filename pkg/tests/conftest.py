import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bpengine import terms  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def fresh_cache():
    terms.clear_cache()
    yield
    terms.clear_cache()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
