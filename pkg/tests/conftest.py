import pytest

from ordspectra import oracle
from ordspectra.data import default_store


@pytest.fixture(scope="session")
def get_group():
    """Session-wide cache of oracle constructions (they are expensive)."""
    cache = {}

    def build(kind, n, q):
        key = (kind, n, q)
        if key not in cache:
            cache[key] = oracle.build_classical(kind, n, q)
        return cache[key]

    return build


@pytest.fixture(scope="session")
def store():
    return default_store()
