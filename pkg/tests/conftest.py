from __future__ import annotations

from math import gcd

import pytest

# Lines recorded by the acceptance module, echoed in the terminal summary so
# they survive output capture.
ACCEPTANCE_LINES: list[str] = []


def desk_grid(p_max: int = 12, s_max: int = 4, p_min: int = 3) -> list[tuple[int, int, int, int]]:
    """(p, q, r, s) with 2 <= q < p, gcd 1, 1 <= r < p + q, 1 <= |s| <= s_max."""
    s_values = [s for s in range(-s_max, s_max + 1) if s]
    return [
        (p, q, r, s)
        for p in range(p_min, p_max + 1)
        for q in range(2, p)
        if gcd(p, q) == 1
        for r in range(1, p + q)
        for s in s_values
    ]


@pytest.fixture(scope="session")
def grid() -> list[tuple[int, int, int, int]]:
    return desk_grid()


def pytest_terminal_summary(terminalreporter) -> None:
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
