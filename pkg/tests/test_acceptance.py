"""Acceptance criteria, one test per criterion.

Every comparison is exact (integer or rational equality); the only
tolerance is the per-arrangement freeness time limit of
``verify.FREENESS_SECONDS`` = 10 s. Each criterion's ``[PASS]``/``[FAIL]``
line is collected in ``LINES`` and printed in the terminal summary by
``conftest.py``.
"""

import pytest

from conicline import verify

LINES = []


@pytest.mark.parametrize("number,name,fn", verify.CRITERIA, ids=[c[1] for c in verify.CRITERIA])
def test_criterion(number, name, fn):
    (res,) = verify.run(str(number))
    LINES.append(res.line())
    bad = [msg for ok, msg in res.details if not ok]
    assert res.passed, "\n".join(bad)


def test_freeness_time_limit_is_pinned():
    assert verify.FREENESS_SECONDS == 10.0
