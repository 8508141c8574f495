import pytest

from modext import enumerate_flats
from modext.corpus import corpus_matroid, corpus_names


@pytest.fixture(scope="session")
def corpus():
    """name -> (matroid, lattice), built once per test run."""
    cache = {}

    def get(name):
        if name not in cache:
            m = corpus_matroid(name)
            cache[name] = (m, enumerate_flats(m))
        return cache[name]

    return get


@pytest.fixture(scope="session")
def all_corpus_names():
    return corpus_names()
