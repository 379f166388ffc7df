"""Tests the functionality in the symtc.algebra.cochains module."""

import pytest

from symtc.algebra.cochains import CochainComplex
from symtc.algebra.cochains import cochain_complex
from symtc.services.base import SymmetricSquareFamily
from symtc.topology.simplicial import to_simplicial_set
from symtc.types.complex import Complex
from symtc.utils.errors import SubcomplexError
from tests.testutils import sset_of
from tests.testutils import verify_matrix


def test_circle_coboundary(circle):
    """Test the coboundary of the boundary of a triangle."""
    # First, build the cochain complex
    c = cochain_complex(circle)
    assert c.generator_counts == (3, 3)
    assert not c.relative
    assert c.name == "S^1"

    # Next, verify that δ_0 sends each vertex to the edges containing it
    verify_matrix(c.coboundary(0), [[1, 1, 0], [1, 0, 1], [0, 1, 1]])

    # Finally, verify the zero-sized coboundaries at the ends of the grade range
    assert c.coboundary(1).shape == (0, 3)
    assert c.coboundary(-1).shape == (3, 0)
    assert c.coboundary(5).shape == (0, 0)


@pytest.mark.parametrize("kind, n", [("sphere", 2), ("rp2", None), ("interval", None), ("point", None)])
def test_coboundary_squares_to_zero(kind, n):
    """Test that consecutive coboundaries compose to zero, including on products and quotients."""
    family = SymmetricSquareFamily(sset_of(kind, n))
    for s in [family.x, family.product, family.quotient, family.image_diagonal]:
        c = CochainComplex(s)
        for k in range(c.dimension - 1):
            assert (c.coboundary(k + 1) @ c.coboundary(k)).is_zero()


def test_relative_generators(circle):
    """Test that the relative complex of (SP²S¹, dS¹) drops the generators of the subcomplex."""
    # First, build the relative complex
    family = SymmetricSquareFamily(circle)
    c = CochainComplex(family.quotient, family.image_diagonal_family, "pair")

    # Next, verify the generator counts
    assert c.relative
    assert c.generator_counts == (3, 12, 9)

    # Finally, verify that simplices of dX have no position
    for k, grade in enumerate(family.image_diagonal_family):
        for simplex in grade:
            assert c.position(k, simplex) == -1
    assert sorted(set(c.generators(0).tolist()) | set(family.image_diagonal_family[0])) == list(range(6))


def test_relative_rejects_open_family(circle):
    """Test that a relative complex requires a face-closed subcomplex."""
    with pytest.raises(SubcomplexError) as ex_info:
        CochainComplex(circle, (frozenset(), frozenset({0})))
    assert ex_info.value.method == "cochain_complex"


def test_front_and_back_indices():
    """Test that front and back face indices pick the Alexander-Whitney faces."""
    # First, build the cochains of a solid triangle
    s = to_simplicial_set(Complex(vertex_count=3, maximal_simplices=[(0, 1, 2)], name="triangle"))
    c = CochainComplex(s)

    # Next, verify the front and back edges of the triangle
    assert c.front_index(2, 1).tolist() == [s.lookup(1, (0, 1))]
    assert c.back_index(2, 1).tolist() == [s.lookup(1, (1, 2))]

    # Finally, verify the front and back vertices of every edge
    assert c.front_index(1, 0).tolist() == [s.lookup(0, (key[0],)) for key in s.keys(1)]
    assert c.back_index(1, 0).tolist() == [s.lookup(0, (key[1],)) for key in s.keys(1)]


def test_subcomplex_faces_are_dropped(circle):
    """Test that faces lying in the subcomplex read as -1 in the index arrays of a relative complex."""
    # First, build the relative complex of (SP²S¹, dS¹)
    family = SymmetricSquareFamily(circle)
    c = CochainComplex(family.quotient, family.image_diagonal_family)
    inside = family.image_diagonal_family[0]

    # Next, compute the front and back vertices of every relative edge
    front = c.front_index(1, 0)
    back = c.back_index(1, 0)
    assert front.size == 12

    # Finally, verify that a face reads as -1 exactly when it lies in dS¹
    for row, edge in enumerate(c.generators(1)):
        first = family.quotient.front_face(1, int(edge), 0)[0]
        last = family.quotient.back_face(1, int(edge), 0)[0]
        assert (front[row] == -1) == (first in inside)
        assert (back[row] == -1) == (last in inside)


def test_fingerprint(circle):
    """Test that the fingerprint distinguishes absolute and relative complexes."""
    family = SymmetricSquareFamily(circle)
    absolute = CochainComplex(family.quotient)
    relative = CochainComplex(family.quotient, family.image_diagonal_family)
    assert absolute.fingerprint() == CochainComplex(family.quotient).fingerprint()
    assert absolute.fingerprint() != relative.fingerprint()
