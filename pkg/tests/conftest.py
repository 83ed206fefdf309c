from __future__ import annotations

import sys

import pytest

from schurlab.codes import CodeSet
from schurlab.words import Word

# The seven-word set of triples on Z_2^7 that is closed under shifts but not a code
X7_PRIME_BLOCKS = [(3, 5, 6), (2, 4, 5), (1, 3, 4), (0, 2, 3), (6, 1, 2), (5, 0, 1), (4, 6, 0)]


def xs(n: int, *idx: int) -> Word:
    return Word(n, sum(1 << i for i in idx))


@pytest.fixture
def x7_prime() -> CodeSet:
    return CodeSet(7, tuple(xs(7, *b) for b in X7_PRIME_BLOCKS))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    report = getattr(mod, "REPORT", None)
    if report:
        terminalreporter.section("acceptance criteria")
        for k in sorted(report):
            terminalreporter.write_line(report[k])
