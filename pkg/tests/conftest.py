import time
from contextlib import contextmanager

import pytest

# criterion number -> (title, passed, seconds, limit)
ACCEPTANCE: dict[int, tuple[str, bool, float, float]] = {}


@contextmanager
def _measure(number, title, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ACCEPTANCE[number] = (title, ok and elapsed < limit, elapsed, limit)
        status = "PASS" if ACCEPTANCE[number][1] else "FAIL"
        print(f"\nacceptance {number}: {status}  {title}  ({elapsed * 1000:.1f} ms, limit {limit * 1000:g} ms)")
    assert elapsed < limit, f"criterion {number} took {elapsed:.3f}s, limit {limit}s"


@pytest.fixture
def criterion():
    return _measure


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, elapsed, limit = ACCEPTANCE[number]
        terminalreporter.write_line(
            f"{number}. {'PASS' if ok else 'FAIL'}  {title}  ({elapsed * 1000:.1f} ms, limit {limit * 1000:g} ms)")
