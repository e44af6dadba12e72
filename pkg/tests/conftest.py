import pytest

from parthopf.exactmath import QQ
from parthopf.zoo import positive_pairs


@pytest.fixture(scope="session")
def pairs():
    """The positive example pairs, keyed by name prefix."""
    return {p.name: p for p in positive_pairs()}


@pytest.fixture(scope="session")
def bismash_of():
    from parthopf.bismash import bismash

    cache = {}

    def get(p):
        if p.name not in cache:
            cache[p.name] = bismash(p)
        return cache[p.name]

    return get


def pick(pairs, prefix):
    return next(p for name, p in pairs.items() if name.startswith(prefix))
