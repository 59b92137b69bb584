"""The fourteen acceptance criteria at their stated tolerances.

Each check prints one PASS/FAIL line; the lines are repeated in the
terminal summary.  Criterion 11 is expected to fail: see the decisions
ledger for the analysis.
"""
import pytest

from evanescent import acceptance

RESULTS = []


@pytest.mark.parametrize("check", acceptance.CHECKS, ids=lambda c: c.__name__.removeprefix("check_"))
def test_criterion(check):
    res = check()
    RESULTS.append(res)
    print(res.line())
    assert res.passed, res.line()
