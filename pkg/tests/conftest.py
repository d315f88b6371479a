from functools import lru_cache

import pytest

from treesets.sources import named_set


@lru_cache(maxsize=None)
def cached_set(name, horizon):
    return named_set(name, horizon)


@pytest.fixture(scope="session")
def fib():
    return cached_set("fibonacci", 24)


@pytest.fixture(scope="session")
def trib():
    return cached_set("tribonacci", 24)


@pytest.fixture(scope="session")
def chacon():
    return cached_set("chacon", 24)


@pytest.fixture(scope="session")
def cas_a():
    return cached_set("cassaigne-acyclic", 24)


@pytest.fixture(scope="session")
def cas_n():
    return cached_set("cassaigne-neutral", 24)
