"""The eight headline verification criteria, one test each.

Every test prints a single PASS/FAIL line with the criterion's detail, so
``pytest -v -s tests/test_acceptance.py`` doubles as the verification
report (the CLI's ``verify-claims`` subcommand runs the same checks).
"""

import pytest

from factgraph import acceptance


@pytest.mark.parametrize(
    "name,criterion",
    acceptance.CRITERIA,
    ids=[name.replace(" ", "-") for name, _ in acceptance.CRITERIA],
)
def test_criterion(name, criterion):
    passed, detail = criterion()
    print(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
    assert passed, f"{name}: {detail}"
