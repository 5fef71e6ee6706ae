import time
from contextlib import contextmanager

import pytest

from sohyper.encodings.ck import FOUR_STATE_SYSTEM
from sohyper.system import parse_system

# criterion number -> (passed, title, details)
ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def four_state():
    return parse_system(FOUR_STATE_SYSTEM)


@pytest.fixture
def criterion():
    @contextmanager
    def record(number: int, title: str):
        details: list[str] = []
        t0 = time.perf_counter()
        ok = False
        try:
            yield details.append
            ok = True
        finally:
            details.append(f"{time.perf_counter() - t0:.1f}s")
            ACCEPTANCE[number] = (ok, title, details)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, title, details = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title} ({'; '.join(details)})")
