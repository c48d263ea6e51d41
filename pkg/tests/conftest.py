import functools

import numpy as np
import pytest

from stokes2.factor import Factorizer

ACCEPTANCE = pytest.StashKey[list]()


@functools.lru_cache(maxsize=None)
def factorizer(omega1):
    return Factorizer(omega1)


@pytest.fixture
def fz():
    return factorizer


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def record(request):
    """``record(criterion, passed, detail)`` adds a line to the end-of-run summary."""
    rows = request.config.stash.setdefault(ACCEPTANCE, [])

    def _record(criterion, passed, detail):
        rows.append((criterion, bool(passed), detail))

    return _record


def pytest_terminal_summary(terminalreporter, config):
    rows = config.stash.get(ACCEPTANCE, [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, detail in sorted(rows, key=lambda r: r[0]):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
