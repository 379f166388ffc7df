"""Contains utility functions for testing the symtc engine."""

from itertools import product
from typing import Dict
from typing import Optional
from typing import Set
from typing import Tuple

import numpy as np
from hypothesis import strategies as st

from symtc.algebra.cohomology import CohomologyRing
from symtc.algebra.cup_length import GradedSubspace
from symtc.algebra.f2 import F2Matrix
from symtc.topology.generators import generate
from symtc.topology.simplicial import SimplicialSet
from symtc.topology.simplicial import SSetMap
from symtc.topology.simplicial import to_simplicial_set
from symtc.types.complex import Complex
from symtc.types.enums import GeneratorKind


def sset_of(kind: str, n: Optional[int] = None) -> SimplicialSet:
    """Build the simplicial set of a built-in complex."""
    return to_simplicial_set(generate(GeneratorKind(kind), n))


def verify_simplicial_set(s: SimplicialSet, grades: Tuple[int, ...], name: Optional[str] = None):
    """Verify that a simplicial set has the given grades and satisfies the simplicial identities."""
    assert s.grades == grades
    assert s.dimension == len(grades) - 1
    if name is not None:
        assert s.name == name
    s.verify_identities()


def verify_maps_equal(f: SSetMap, g: SSetMap):
    """Verify that two simplicial maps agree on every nondegenerate simplex."""
    assert f.source is g.source
    assert f.target is g.target
    for k in range(f.source.dimension + 1):
        for simplex in range(f.source.count(k)):
            assert f.image(k, simplex) == g.image(k, simplex)


def verify_matrix(m: F2Matrix, expected: list):
    """Verify that a matrix holds the expected 0/1 rows."""
    assert m.to_array().tolist() == expected


def verify_cocycle(ring: CohomologyRing, k: int, cochain: np.ndarray):
    """Verify that a cochain of the given grade is a cocycle of the ring's complex."""
    delta = ring.complex.coboundary(k).to_array().astype(np.int64)
    assert not (delta @ cochain.astype(np.int64) % 2).any()


def elements(span_basis: np.ndarray) -> Set[Tuple[int, ...]]:
    """Enumerate every nonzero element of the span of the given rows."""
    found = set()
    for mask in product((0, 1), repeat=span_basis.shape[0]):
        vector = (np.asarray(mask, dtype=np.int64) @ span_basis.astype(np.int64)) % 2
        if vector.any():
            found.add(tuple(int(v) for v in vector))
    return found


def brute_force_cup_length(v: GradedSubspace) -> int:
    """Compute the cup-length of a graded subspace by enumerating products of its elements.

    Every element of v is a sum of homogeneous elements and a product of sums is a sum of homogeneous products, so some
    k-fold product is nonzero exactly when some k-fold product of homogeneous elements is nonzero. The products are
    enumerated factor by factor, keeping the set of distinct nonzero products.
    """
    ring = v.ring
    factors: Dict[int, Set[Tuple[int, ...]]] = {k: elements(span.basis.to_array()) for k, span in v.spans.items()}
    current = {(k, element) for k, found in factors.items() for element in found}
    length = 0
    while current:
        length += 1
        following = set()
        for grade, element in current:
            for k, found in factors.items():
                if grade + k > ring.dimension:
                    continue
                for factor in found:
                    result = ring.multiply(
                        k, grade, np.asarray([factor], dtype=np.uint8), np.asarray([element], dtype=np.uint8)
                    )[0, 0]
                    if result.any():
                        following.add((grade + k, tuple(int(r) for r in result)))
        current = following
    return length


@st.composite
def small_complexes(draw, max_vertices: int = 5, max_dimension: int = 2) -> Complex:
    """Draw a small simplicial complex with random maximal simplices."""
    vertex_count = draw(st.integers(min_value=1, max_value=max_vertices))
    simplex = st.lists(
        st.integers(min_value=0, max_value=vertex_count - 1), min_size=1, max_size=max_dimension + 1, unique=True
    ).map(lambda vertices: tuple(sorted(vertices)))
    simplices = draw(st.lists(simplex, min_size=1, max_size=6))
    return Complex(vertex_count=vertex_count, maximal_simplices=simplices, name="random")
