import numpy as np
import pytest

from momentum_walk import MomentumLattice, symmetric_lattice


@pytest.fixture
def rng():
    return np.random.default_rng(20240731)


@pytest.fixture
def small_lattice():
    return symmetric_lattice(8)


@pytest.fixture
def kick_lattice():
    # wide enough that a |k| <= 3 kick keeps its Bessel tail on the lattice
    return symmetric_lattice(45)
