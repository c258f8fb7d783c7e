"""Shared fixtures: small rings and the regression schemes used across
modules.  The expensive scroll objects are session-scoped so every test
module reuses one computation.
"""

import pytest

from seccones import ClosedPoint, Ideal, PolyRing, pei_chain, scroll_ideal


# ---------------------------------------------------------------------------
# acceptance reporting: test_acceptance.py records one line per criterion;
# the terminal summary prints them whether the criterion passed or failed.
# ---------------------------------------------------------------------------

ACCEPTANCE_LINES = []


def record_criterion(number, ok, detail):
    ACCEPTANCE_LINES.append(
        "criterion %d: %s — %s" % (number, "PASS" if ok else "FAIL", detail)
    )


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


# ---------------------------------------------------------------------------
# small rings
# ---------------------------------------------------------------------------


@pytest.fixture
def ring3():
    return PolyRing(["x", "y", "z"])


@pytest.fixture
def ring4():
    return PolyRing(["x0", "x1", "x2", "x3"])


@pytest.fixture
def ring5():
    return PolyRing(["x0", "x1", "x2", "x3", "x4"])


# ---------------------------------------------------------------------------
# the fat line: a non-reduced scheme in P^3 supported on {x0 = x1 = 0},
# projected from the coordinate point (1:0:0:0).  Small but rich: its
# chain has five distinct stages and interesting saturations.
# ---------------------------------------------------------------------------

FAT_LINE_GENS = [
    "x0^4",
    "x0^3*x1",
    "x0^2*x1^2 + x0*x3^3",
    "x0*x1*x2^2 + x1^4",
    "x1*x3^3",
]


@pytest.fixture(scope="session")
def fat_line():
    ring = PolyRing(["x0", "x1", "x2", "x3"])
    return Ideal(ring, FAT_LINE_GENS)


@pytest.fixture(scope="session")
def fat_line_chain(fat_line):
    p = ClosedPoint(fat_line.ring, [1, 0, 0, 0])
    return pei_chain(fat_line, p)


# ---------------------------------------------------------------------------
# scrolls in P^10 (2x2 minors of block catalecticant matrices)
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def ring11():
    return PolyRing(["x%d" % i for i in range(11)])


@pytest.fixture(scope="session")
def scroll_two_blocks(ring11):
    """The scroll of type (1, 8): a surface whose projections interact."""
    return scroll_ideal(ring11, [1, 8])


@pytest.fixture(scope="session")
def scroll_four_blocks(ring11):
    """The scroll of type (1, 1, 2, 3): a threefold with six marked points."""
    return scroll_ideal(ring11, [1, 1, 2, 3])


@pytest.fixture(scope="session")
def scroll_two_blocks_chain_e3(scroll_two_blocks, ring11):
    p = ClosedPoint(ring11, [0, 0, 0, 1] + [0] * 7)
    return pei_chain(scroll_two_blocks, p)
