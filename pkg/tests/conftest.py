"""Shared fixtures.

Family instances and reduced-matrix inverses are cached per session because
several test modules (and two acceptance criteria) walk the same range of n,
and exact inversion of the larger matrices is the slow part of the suite.
"""

import functools

import pytest

from goodsets import family, invert, reduced_incidence


@pytest.fixture(scope="session")
def fam():
    """Memoised ``family``: fam(n) -> FamilyInstance."""
    return functools.lru_cache(maxsize=None)(family)


@pytest.fixture(scope="session")
def inverse_of(fam):
    """Memoised exact inverse of the reduced incidence matrix for index n."""

    @functools.lru_cache(maxsize=None)
    def get(n):
        inv = invert(reduced_incidence(fam(n)).matrix)
        assert inv is not None, f"reduced matrix for n={n} should be invertible"
        return inv

    return get
