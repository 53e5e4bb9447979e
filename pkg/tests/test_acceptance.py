"""One test per acceptance criterion; each prints a [PASS]/[FAIL] line.

Run directly (``python3 tests/test_acceptance.py``) to print the lines
without pytest.
"""

from __future__ import annotations

import pytest

from hullforge.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, len(CRITERIA) + 1)])
def test_criterion(criterion, acceptance_report):
    result = criterion()
    print(result.line())
    acceptance_report(result.line())
    assert result.passed, result.line()


if __name__ == "__main__":
    for fn in CRITERIA:
        print(fn().line(), flush=True)
