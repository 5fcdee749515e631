import contextlib
import time

import pytest

_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Context manager recording one acceptance criterion as PASS or FAIL."""

    @contextlib.contextmanager
    def record(number, title):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            _ACCEPTANCE[number] = f"FAIL  criterion {number}: {title} ({time.perf_counter() - start:.2f} s)"
            raise
        _ACCEPTANCE[number] = f"PASS  criterion {number}: {title} ({time.perf_counter() - start:.2f} s)"

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[number])
