from __future__ import annotations

import numpy as np
import pytest

from psmcodes import example1 as ex
from psmcodes.field import gf
from psmcodes.psmc import build_scheme

# A reduced GF(4) scheme small enough to enumerate every message:
# n=7, l=2, k1=2, r=3 gives a [8, 5, 3]_4 code and 2^(2*4-2) = 64 messages.
SMALL_H0 = [[1, 0, 0, 1, 1, 1, 1],
            [0, 1, 1, 1, 0, 0, 1]]
SMALL_P = [[2, 0, 3],
           [1, 3, 2]]


@pytest.fixture(scope="session")
def scheme():
    return build_scheme(ex.FIELD, ex.N, ex.U, ex.T, ex.L, ex.K1, ex.R, ex.H0, ex.P)


@pytest.fixture(scope="session")
def small_scheme():
    return build_scheme(gf(4), 7, 3, 1, 2, 2, 3, np.array(SMALL_H0), np.array(SMALL_P))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = next((m for name, m in sys.modules.items()
                if name.endswith("test_acceptance") and hasattr(m, "ACCEPTANCE_RESULTS")), None)
    if mod is None or not mod.ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.ACCEPTANCE_RESULTS):
        terminalreporter.write_line(mod.ACCEPTANCE_RESULTS[number])
