"""Acceptance gate: every criterion runs at its stated tolerance and prints
one pass/fail line (visible with ``pytest -s`` or via ``grouporders report``)."""

import pytest

from grouporders import report


@pytest.mark.parametrize("criterion", report.ALL_CRITERIA,
                         ids=[f"criterion_{i}" for i in range(1, 11)])
def test_criterion(criterion):
    result = criterion(report.DEFAULT_SEED)
    print(result.line())
    assert result.passed, result.line()
