import random

import pytest

from signedgraphs.core import NEG, POS, SignedGraph


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def pos_triangle():
    return SignedGraph(3, [(0, 1, POS), (1, 2, POS), (0, 2, POS)])


@pytest.fixture
def neg_triangle():
    return SignedGraph(3, [(0, 1, NEG), (1, 2, NEG), (0, 2, NEG)])


@pytest.fixture
def digon():
    return SignedGraph(2, [(0, 1, POS), (0, 1, NEG)])
