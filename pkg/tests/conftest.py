import pytest

from test_acceptance import RESULTS


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, secs, detail = RESULTS[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} ({secs:.1f}s) {detail}")


@pytest.fixture
def rng():
    import random

    return random.Random(0)
