"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import pytest

from cutsets import acceptance

CRITERIA = [
    acceptance.lemma1_suite,
    acceptance.theorem3_suite,
    acceptance.oracle_equivalence,
    acceptance.dsw_suite,
    acceptance.lemma3b_suite,
    acceptance.tree_order_suite,
    acceptance.theorem1_pipeline,
    acceptance.remark_suite,
    acceptance.dilworth_mirsky,
]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.line()

