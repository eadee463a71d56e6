"""Shared fixtures: session-cached algebra contexts and Gauss workspaces
(the decomposition is the expensive step, so every test file reuses it).
"""

import pytest

from superyangian import AlgebraContext, CurrentContext
from superyangian.verify import Workspace

# the four configurations every suite must pass on
ACCEPTANCE_CONTEXTS = [(1, 1, 3, 6), (2, 1, 3, 5), (1, 2, 3, 5), (2, 1, 2, 4)]

# shapes x primes used by the identity-registry gate (N = 6 so the
# bivariate coefficient bound r + s <= 5 is attainable)
REFERENCE_CONTEXTS = [(m, n, p, 6)
                      for (m, n) in [(1, 1), (2, 1), (1, 2)]
                      for p in (2, 3, 5)]

_WORKSPACES: dict = {}


def workspace(m: int, n: int, p: int, N: int) -> Workspace:
    key = (m, n, p, N)
    if key not in _WORKSPACES:
        _WORKSPACES[key] = Workspace(AlgebraContext(m, n, p, N))
    return _WORKSPACES[key]


@pytest.fixture(scope="session")
def ws_factory():
    return workspace


@pytest.fixture(scope="session")
def ctx_small():
    """The smallest odd-p context with one even and one odd index."""
    return workspace(1, 1, 3, 4).ctx


@pytest.fixture(scope="session")
def ctx_21():
    return workspace(2, 1, 3, 4).ctx


@pytest.fixture(scope="session")
def ctx_12():
    return workspace(1, 2, 3, 4).ctx


@pytest.fixture(scope="session")
def cur_21():
    return CurrentContext(2, 1, 3, 4)
