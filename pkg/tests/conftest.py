import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def int_polymul(a, b):
    """Exact product of integer coefficient lists (ascending degree)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def f3_pointwise(c, x):
    """f(f(f(x))) evaluated by plain iteration."""
    for _ in range(3):
        x = x * x + c
    return x


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test still fails through its asserts."""

    def record(label: str, passed: bool, detail: str = "") -> bool:
        line = f"[{'PASS' if passed else 'FAIL'}] {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
