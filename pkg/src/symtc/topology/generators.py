"""Contains the built-in complex generators."""

from itertools import combinations
from logging import getLogger
from typing import List
from typing import Optional
from typing import Tuple

from symtc.types.complex import Complex
from symtc.types.enums import GeneratorKind
from symtc.utils.errors import InvalidGeneratorError

# Set the default logger for the symtc engine
logger = getLogger(__name__)

# The 6-vertex triangulation of the real projective plane; every edge lies in exactly two triangles
RP2_TRIANGLES = [
    (0, 1, 2),
    (0, 2, 3),
    (0, 1, 5),
    (0, 4, 5),
    (0, 3, 4),
    (1, 2, 4),
    (1, 3, 4),
    (1, 3, 5),
    (2, 3, 5),
    (2, 4, 5),
]


def _torus_triangles() -> List[Tuple[int, ...]]:
    """Return the 18 triangles of the 3x3 grid triangulation of the torus, vertex (i, j) being 3i + j."""
    triangles = []
    for i in range(3):
        for j in range(3):
            corner = 3 * i + j
            right = 3 * ((i + 1) % 3) + j
            up = 3 * i + (j + 1) % 3
            diagonal = 3 * ((i + 1) % 3) + (j + 1) % 3
            triangles.append(tuple(sorted((corner, right, diagonal))))
            triangles.append(tuple(sorted((corner, up, diagonal))))
    return triangles


def generate(kind: GeneratorKind, n: Optional[int] = None) -> Complex:
    """Build one of the built-in complexes.

    Arguments:
    kind (GeneratorKind):   The complex to build.
    n (int):                The dimension parameter; required for spheres and ignored otherwise.

    Returns:    The generated complex.
    """
    if kind == GeneratorKind.SPHERE:
        if n is None or n < 0:
            raise InvalidGeneratorError(f"{kind}:{n}", [f"{GeneratorKind.SPHERE}:N with N >= 0"])
        simplices = list(combinations(range(n + 2), n + 1))
        result = Complex(vertex_count=n + 2, maximal_simplices=simplices, name=f"S^{n}")
    elif kind == GeneratorKind.TORUS:
        result = Complex(vertex_count=9, maximal_simplices=_torus_triangles(), name="T^2")
    elif kind == GeneratorKind.RP2:
        result = Complex(vertex_count=6, maximal_simplices=RP2_TRIANGLES, name="RP^2")
    elif kind == GeneratorKind.POINT:
        result = Complex(vertex_count=1, maximal_simplices=[(0,)], name="point")
    elif kind == GeneratorKind.INTERVAL:
        result = Complex(vertex_count=2, maximal_simplices=[(0, 1)], name="interval")
    else:
        # The suspension of the square 0-1-2-3 with apexes 4 and 5
        square = [(0, 1), (1, 2), (2, 3), (0, 3)]
        simplices = [edge + (apex,) for edge in square for apex in (4, 5)]
        result = Complex(vertex_count=6, maximal_simplices=simplices, name="octahedron")
    logger.debug(f"generate: built '{result.name}' with f-vector {result.f_vector()}.")
    return result


def parse_generator(spec: str) -> Complex:
    """Build a complex from a command-line generator specification of the form NAME[:PARAM].

    Arguments:
    spec (str): The generator specification, for example "sphere:3" or "torus".

    Returns:    The generated complex.
    """
    name, _, param = spec.partition(":")
    allowed = [f"{GeneratorKind.SPHERE}:N"] + [kind.value for kind in GeneratorKind if kind != GeneratorKind.SPHERE]
    try:
        kind = GeneratorKind(name.strip().lower())
    except ValueError as ex:
        raise InvalidGeneratorError(spec, allowed) from ex
    if kind != GeneratorKind.SPHERE:
        if param:
            raise InvalidGeneratorError(spec, allowed)
        return generate(kind)
    if not param.strip().isdigit():
        raise InvalidGeneratorError(spec, allowed)
    return generate(kind, int(param))
