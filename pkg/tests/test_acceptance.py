"""Acceptance gate: one test and one PASS/FAIL line per criterion.

All criteria are exact equalities; two of them also carry a runtime budget.
Run ``python tests/test_acceptance.py`` to print the lines without pytest.
"""

import sys

import pytest

from parkvol.checks import CHECKS

# full sizes for each check and the wall-clock budget in seconds, if any
N_MAX = 8
BUDGETS = {"euler": 60.0, "three-way": 300.0}

SUMMARY: list[str] = []


def run_criterion(name: str):
    number, fn = CHECKS[name]
    result = fn(N_MAX)
    budget = BUDGETS.get(name)
    in_budget = budget is None or result.seconds < budget
    ok = result.ok and in_budget
    tol = "exact" if budget is None else f"exact, under {budget:.0f}s"
    line = f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {result.name}: {result.cases} cases ({tol})"
    return ok, line, result


@pytest.mark.slow
@pytest.mark.parametrize("name", list(CHECKS), ids=[f"c{CHECKS[k][0]:02d}-{k}" for k in CHECKS])
def test_criterion(name):
    ok, line, result = run_criterion(name)
    SUMMARY.append(line)
    assert result.ok, "\n".join(result.failures)
    assert ok, f"{name} took {result.seconds:.1f}s, over budget"


if __name__ == "__main__":
    all_ok = True
    for name in CHECKS:
        ok, line, _ = run_criterion(name)
        all_ok &= ok
        print(line, flush=True)
    sys.exit(0 if all_ok else 1)
