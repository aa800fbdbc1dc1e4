"""Acceptance criteria at exact equality; one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import sys

import pytest

from congmon.acceptance import CRITERIA


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    result = CRITERIA[number](False)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


if __name__ == "__main__":
    failed = 0
    for k in sorted(CRITERIA):
        r = CRITERIA[k](False)
        print(r.line())
        failed += not r.passed
    sys.exit(1 if failed else 0)
