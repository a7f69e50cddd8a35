"""Acceptance battery: one test per criterion; each result line is echoed in
the terminal summary (see conftest.py)."""

import pytest

from heavyberge.acceptance import CRITERIA, run_criterion

LINES: dict[int, str] = {}


@pytest.mark.acceptance
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    res = run_criterion(number)
    LINES[number] = res.line()
    print(res.line())
    assert res.passed, res.detail
