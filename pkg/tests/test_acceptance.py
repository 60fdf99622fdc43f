"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line."""
import pytest

from dslab import acceptance

NUMBERS = [n for n, _, _ in acceptance.CRITERIA]


@pytest.mark.parametrize("number", NUMBERS, ids=[f"criterion_{n:02d}" for n in NUMBERS])
def test_criterion(number, capsys):
    r = acceptance.run_one(number)
    with capsys.disabled():
        print("\n" + r.line())
    assert r.ok, r.detail
