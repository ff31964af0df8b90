"""Shared fixtures and hypothesis strategies for the test suite.

The strategies build random permutations as shuffled image tuples, so every
generated value is a legal group element and shrinking stays inside the
domain.  Groups used across modules are built once per session.
"""

import random

import pytest
from hypothesis import strategies as st

from hallbound import Permutation, make_named


def permutations_of_degree(degree: int):
    """Strategy producing Permutation objects on {0..degree-1}."""
    return st.permutations(range(degree)).map(lambda images: Permutation(images))


def random_permutation(rng: random.Random, degree: int) -> Permutation:
    images = list(range(degree))
    rng.shuffle(images)
    return Permutation(images)


@pytest.fixture(scope="session")
def s4():
    return make_named("S4")


@pytest.fixture(scope="session")
def a4():
    return make_named("A4")


@pytest.fixture(scope="session")
def a5():
    return make_named("A5")


@pytest.fixture(scope="session")
def sl25():
    return make_named("SL(2,5)")
