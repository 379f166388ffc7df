"""Module for containing pytest fixtures."""

import pytest

from symtc.engine import TopologyEngine
from symtc.topology.simplicial import SimplicialSet
from tests.testutils import sset_of


@pytest.fixture(scope="session")
def engine() -> TopologyEngine:
    """Create one engine shared by the whole session, so each symmetric square is built once."""
    return TopologyEngine()


@pytest.fixture(scope="session")
def circle() -> SimplicialSet:
    """Create the boundary of a triangle as a simplicial set."""
    return sset_of("sphere", 1)


@pytest.fixture(scope="session")
def sphere2() -> SimplicialSet:
    """Create the boundary of a tetrahedron as a simplicial set."""
    return sset_of("sphere", 2)


@pytest.fixture(scope="session")
def sphere3() -> SimplicialSet:
    """Create the boundary of a 4-simplex as a simplicial set."""
    return sset_of("sphere", 3)


@pytest.fixture(scope="session")
def torus() -> SimplicialSet:
    """Create the 9-vertex torus as a simplicial set."""
    return sset_of("torus")


@pytest.fixture(scope="session")
def rp2() -> SimplicialSet:
    """Create the 6-vertex real projective plane as a simplicial set."""
    return sset_of("rp2")


@pytest.fixture(scope="session")
def point() -> SimplicialSet:
    """Create the one-point simplicial set."""
    return sset_of("point")
