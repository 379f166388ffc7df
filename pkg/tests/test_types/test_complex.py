"""Tests the functionality in the symtc.types.complex module."""

import pytest
from pydantic import ValidationError

from symtc.types.complex import Complex


def test_complex_is_canonical():
    """Test that the maximal simplices are deduplicated, pruned and sorted, with isolated vertices added."""
    # First, create a complex with a redundant edge, a duplicate triangle and an unused vertex
    c = Complex(vertex_count=5, maximal_simplices=[(1, 2, 3), (0, 1), (1, 2), (1, 2, 3)], name="messy")

    # Next, verify the canonical form
    assert c.maximal_simplices == [(0, 1), (1, 2, 3), (4,)]
    assert c.dimension == 2

    # Finally, verify that the same simplices give an equal complex
    assert c == Complex(vertex_count=5, maximal_simplices=[(4,), (1, 2, 3), (0, 1)], name="messy")


def test_simplices_and_f_vector():
    """Test that simplices closes the maximal simplices under faces."""
    c = Complex(vertex_count=4, maximal_simplices=[(0, 1, 2), (2, 3)])
    assert c.simplices() == {
        0: [(0,), (1,), (2,), (3,)],
        1: [(0, 1), (0, 2), (1, 2), (2, 3)],
        2: [(0, 1, 2)],
    }
    assert c.f_vector() == [4, 4, 1]
    assert c.name is None


@pytest.mark.parametrize(
    "vertex_count, simplices, message",
    [
        (3, [], "empty complex"),
        (3, [()], "empty simplex"),
        (3, [(0, 0)], "duplicate vertex in simplex [0, 0]"),
        (3, [(2, 1)], "simplex [2, 1] is not strictly increasing"),
        (3, [(0, 3)], "index out of range in simplex [0, 3] (vertex count 3)"),
        (3, [(-1, 0)], "index out of range in simplex [-1, 0] (vertex count 3)"),
    ],
)
def test_complex_invalid(vertex_count, simplices, message):
    """Test that malformed complexes are rejected with a descriptive message."""
    with pytest.raises(ValidationError) as ex_info:
        Complex(vertex_count=vertex_count, maximal_simplices=simplices)
    assert message in str(ex_info.value)


def test_complex_is_frozen():
    """Test that complexes cannot be modified after construction."""
    c = Complex(vertex_count=1, maximal_simplices=[(0,)])
    with pytest.raises(ValidationError):
        c.name = "changed"


@pytest.mark.parametrize("name", ["edge", "hollow triangle", "S^1"])
def test_complex_name_valid(name):
    """Test that labels with inner spaces are accepted unchanged."""
    assert Complex(vertex_count=2, maximal_simplices=[(0, 1)], name=name).name == name


@pytest.mark.parametrize("name", ["", " edge", "edge ", " edge ", "two\nlines"])
def test_complex_name_invalid(name):
    """Test that labels that are empty, padded with whitespace or span lines are rejected."""
    with pytest.raises(ValidationError):
        Complex(vertex_count=2, maximal_simplices=[(0, 1)], name=name)
