"""Tests the functionality in the symtc.topology.generators module."""

import pytest

from symtc.topology.generators import generate
from symtc.topology.generators import parse_generator
from symtc.types.enums import GeneratorKind
from symtc.utils.errors import InvalidGeneratorError


@pytest.mark.parametrize(
    "kind, n, name, f_vector",
    [
        (GeneratorKind.SPHERE, 0, "S^0", [2]),
        (GeneratorKind.SPHERE, 1, "S^1", [3, 3]),
        (GeneratorKind.SPHERE, 2, "S^2", [4, 6, 4]),
        (GeneratorKind.SPHERE, 3, "S^3", [5, 10, 10, 5]),
        (GeneratorKind.TORUS, None, "T^2", [9, 27, 18]),
        (GeneratorKind.RP2, None, "RP^2", [6, 15, 10]),
        (GeneratorKind.POINT, None, "point", [1]),
        (GeneratorKind.INTERVAL, None, "interval", [2, 1]),
        (GeneratorKind.OCTAHEDRON, None, "octahedron", [6, 12, 8]),
    ],
)
def test_generate(kind, n, name, f_vector):
    """Test that generate builds the expected complexes."""
    result = generate(kind, n)
    assert result.name == name
    assert result.f_vector() == f_vector


def test_generate_sphere_zero_has_isolated_vertices():
    """Test that the 0-sphere consists of two isolated vertices."""
    assert generate(GeneratorKind.SPHERE, 0).maximal_simplices == [(0,), (1,)]


def test_generated_surfaces_are_closed():
    """Test that every edge of the torus, the projective plane and the octahedron lies in exactly two triangles."""
    for kind in [GeneratorKind.TORUS, GeneratorKind.RP2, GeneratorKind.OCTAHEDRON]:
        result = generate(kind)
        for edge in result.simplices()[1]:
            cofaces = [t for t in result.maximal_simplices if set(edge) <= set(t)]
            assert len(cofaces) == 2


@pytest.mark.parametrize("n", [None, -1])
def test_generate_sphere_invalid(n):
    """Test that a sphere without a valid dimension is rejected."""
    with pytest.raises(InvalidGeneratorError):
        generate(GeneratorKind.SPHERE, n)


@pytest.mark.parametrize(
    "spec, name",
    [("sphere:3", "S^3"), ("SPHERE:1", "S^1"), ("torus", "T^2"), ("rp2", "RP^2"), ("point", "point")],
)
def test_parse_generator(spec, name):
    """Test that parse_generator reads command-line generator specifications."""
    assert parse_generator(spec).name == name


@pytest.mark.parametrize("spec", ["klein", "sphere", "sphere:x", "sphere:-2", "torus:2", ""])
def test_parse_generator_invalid(spec):
    """Test that parse_generator rejects unknown names and bad parameters."""
    with pytest.raises(InvalidGeneratorError) as ex_info:
        parse_generator(spec)
    assert ex_info.value.name == spec
    assert "sphere:N" in ex_info.value.allowed
