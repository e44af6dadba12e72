"""The thirteen acceptance criteria; each prints one pass/fail line."""
import pytest

from parthopf.acceptance import CRITERIA, Context, run_criterion


@pytest.fixture(scope="module")
def ctx():
    return Context(seed=0)


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, ctx, capsys):
    outcome = run_criterion(number, ctx)
    with capsys.disabled():
        print("\n" + outcome.line())
    failure = outcome.report.first_failure() if outcome.report else None
    assert outcome.passed, failure
