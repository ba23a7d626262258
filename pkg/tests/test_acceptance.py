"""The acceptance criteria, one test each, exact integer comparisons throughout.

Criterion 1 runs at the full tier (all fourteen table rows).  Each test prints
its summary line; failing checks are listed with expected and computed values.
"""

import pytest

from dessins.verify import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number, criterion_lines):
    result = run_criterion(number, tier="full" if number == 1 else "core", seed=0)
    line = result.line()
    print(line)
    criterion_lines(line)
    failures = ["%s: expected %s, computed %s%s" % (c.claim, c.expected, c.computed, " (%s)" % c.note if c.note else "")
                for c in result.checks if not c.passed]
    assert result.passed, "\n".join(failures)
