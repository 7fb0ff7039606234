"""Test-local brute-force helpers.  Nothing here imports the package."""

import pytest


def brute_points(a, b, c, half_width):
    """Every (x, y) with 1 <= |x + a| <= half_width on the curve, by direct division."""
    out = []
    for x in range(-a - half_width, -a + half_width + 1):
        if x == -a:
            continue
        num = x * x + b * x + c
        if num % (x + a) == 0:
            out.append((x, num // (x + a)))
    return sorted(out)


def naive_tau(n):
    return sum(1 for k in range(1, n + 1) if n % k == 0)


def brute_integer_roots(a, b, c):
    """Integer roots with multiplicity (as an ascending pair) or None."""
    reach = abs(b) + abs(c) + 1
    roots = [r for r in range(-reach, reach + 1) if a * r * r + b * r + c == 0]
    if len(roots) == 2:
        return tuple(roots)
    if len(roots) == 1:
        r = roots[0]
        if 2 * a * r + b == 0:
            return (r, r)
    return None


@pytest.fixture
def brute():
    return brute_points


# -- acceptance reporting -------------------------------------------------------

ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}")
