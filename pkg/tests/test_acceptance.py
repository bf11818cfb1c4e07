"""Acceptance criteria, one test each, with exact integer comparison.

Every result line is also collected and printed in the terminal summary.
"""
import pytest

from maxtree import acceptance

RESULTS: list[str] = []

CRITERIA = [
    (1, acceptance.criterion_1),
    (2, acceptance.criterion_2),
    (3, acceptance.criterion_3),
    (4, acceptance.criterion_4),
    (5, acceptance.criterion_5),
    (6, acceptance.criterion_6),
    (7, acceptance.criterion_7),
    (8, acceptance.criterion_8),
]


@pytest.mark.parametrize("number, check", CRITERIA, ids=[f"criterion_{n}" for n, _ in CRITERIA])
def test_criterion(number, check):
    result = check()
    assert result.number == number
    RESULTS.append(result.line())
    assert result.passed, result.line()
