"""Tests the functionality in the symtc.topology.sym_square module."""

import pytest
from hypothesis import given
from hypothesis import settings

from symtc.topology.simplicial import euler_characteristic
from symtc.topology.simplicial import identity_map
from symtc.topology.simplicial import to_simplicial_set
from symtc.topology.sym_square import OrbitSimplex
from symtc.topology.sym_square import ProductSimplex
from symtc.topology.sym_square import diagonal_map
from symtc.topology.sym_square import product_with_swap
from symtc.topology.sym_square import symmetric_square
from tests.testutils import small_complexes
from tests.testutils import sset_of
from tests.testutils import verify_maps_equal
from tests.testutils import verify_simplicial_set

# The generator inputs used by the structural checks
GENERATORS = [("sphere", 0), ("sphere", 1), ("sphere", 2), ("point", None), ("interval", None), ("rp2", None)]


def test_product_simplex_flags():
    """Test that product simplices report joint nondegeneracy and swap their components."""
    # First, create a jointly nondegenerate and a jointly degenerate pair
    good = ProductSimplex(2, (0, (1,)), (1, (0,)))
    bad = ProductSimplex(2, (0, (1,)), (1, (1,)))

    # Next, verify the flags
    assert good.jointly_nondegenerate
    assert not bad.jointly_nondegenerate

    # Finally, verify the swap and the canonical orbit representative
    assert good.swapped() == ProductSimplex(2, (1, (0,)), (0, (1,)))
    assert OrbitSimplex.of(good) == OrbitSimplex.of(good.swapped())
    assert OrbitSimplex.of(good).representative == good
    assert not OrbitSimplex.of(good).on_diagonal
    assert OrbitSimplex.of(ProductSimplex(1, (2, ()), (2, ()))).on_diagonal


@pytest.mark.parametrize(
    "kind, n, grades",
    [
        ("point", None, (1,)),
        ("interval", None, (4, 5, 2)),
        ("sphere", 1, (9, 27, 18)),
        ("sphere", 2, (16, 84, 216, 240, 96)),
    ],
)
def test_product_with_swap_grades(kind, n, grades):
    """Test that the product enumerates the jointly nondegenerate pairs."""
    pair = product_with_swap(sset_of(kind, n))
    verify_simplicial_set(pair.total, grades)
    assert euler_characteristic(pair.total) == euler_characteristic(pair.base) ** 2


@pytest.mark.parametrize("kind, n", GENERATORS)
def test_swap_is_an_involution(kind, n):
    """Test that the swap is a simplicial map whose square is the identity."""
    pair = product_with_swap(sset_of(kind, n))
    pair.involution.verify()
    verify_maps_equal(pair.involution.followed_by(pair.involution), identity_map(pair.total))


def test_point_product_is_point():
    """Test that the product of a point with itself is a point with the identity swap."""
    pair = product_with_swap(sset_of("point"))
    verify_simplicial_set(pair.total, (1,))
    verify_maps_equal(pair.involution, identity_map(pair.total))


def test_diagonal_map_circle():
    """Test that the diagonal of the circle hits three vertices and three edges, all fixed by the swap."""
    # First, build the diagonal
    x = sset_of("sphere", 1)
    pair = product_with_swap(x)
    diagonal = diagonal_map(x, pair)
    diagonal.verify()

    # Next, verify the size of the image
    images = [{diagonal.image(k, s)[0] for s in range(x.count(k))} for k in range(2)]
    assert [len(image) for image in images] == [3, 3]

    # Finally, verify that the diagonal followed by the swap is the diagonal
    verify_maps_equal(diagonal.followed_by(pair.involution), diagonal)


@pytest.mark.parametrize(
    "kind, n, quotient_grades",
    [("point", None, (1,)), ("sphere", 1, (6, 15, 9)), ("interval", None, (3, 3, 1))],
)
def test_symmetric_square_grades(kind, n, quotient_grades):
    """Test that the symmetric square has one simplex per orbit."""
    pair = symmetric_square(sset_of(kind, n))
    verify_simplicial_set(pair.quotient, quotient_grades)


@pytest.mark.parametrize("kind, n", GENERATORS)
def test_symmetric_square_structure(kind, n):
    """Test the maps and subcomplexes around the symmetric square."""
    # First, build the symmetric square
    x = sset_of(kind, n)
    pair = symmetric_square(x)

    # Next, verify that every map commutes with faces and the projection is swap-invariant
    for f in [pair.involution, pair.projection, pair.diagonal_inclusion, pair.image_diagonal_inclusion]:
        f.verify()
    pair.image_diagonal_iso.verify()
    verify_maps_equal(pair.involution.followed_by(pair.projection), pair.projection)

    # Now, verify the orbit count in every grade
    for m in range(pair.total.dimension + 1):
        fixed = sum(1 for s in range(pair.total.count(m)) if pair.involution.image(m, s)[0] == s)
        assert pair.total.count(m) == 2 * (pair.quotient.count(m) - fixed) + fixed

    # Finally, verify that dX is a copy of X reached through the diagonal
    assert pair.image_diagonal.grades == x.grades
    assert pair.diagonal_subset.grades == x.grades
    through_diagonal = pair.diagonal.followed_by(pair.projection)
    through_iso = pair.image_diagonal_iso.followed_by(pair.image_diagonal_inclusion)
    verify_maps_equal(through_diagonal, through_iso)


def test_symmetric_square_orbits():
    """Test that quotient simplices carry canonical representatives and on-diagonal flags."""
    pair = symmetric_square(sset_of("sphere", 1))
    for m in range(pair.quotient.dimension + 1):
        for orbit in range(pair.quotient.count(m)):
            simplex = pair.orbit_simplex(m, orbit)
            assert OrbitSimplex.of(simplex.representative.swapped()) == simplex
            assert simplex.on_diagonal == (orbit in {pair.image_diagonal_inclusion.image(m, s)[0]
                                                     for s in range(pair.image_diagonal.count(m))})


@pytest.mark.parametrize(
    "kind, n, chi",
    [("point", None, 1), ("sphere", 0, 3), ("sphere", 1, 0), ("sphere", 2, 3), ("torus", None, 0), ("rp2", None, 1)],
)
def test_symmetric_square_euler_characteristic(kind, n, chi):
    """Test that χ(SP²X) = (χ(X)² + χ(X)) / 2 on the built-in complexes."""
    x = sset_of(kind, n)
    pair = symmetric_square(x)
    assert euler_characteristic(pair.quotient) == chi
    assert chi == (euler_characteristic(x) ** 2 + euler_characteristic(x)) // 2


@settings(max_examples=20, deadline=None)
@given(small_complexes())
def test_symmetric_square_euler_characteristic_random(c):
    """Test that χ(SP²X) = (χ(X)² + χ(X)) / 2 on random small complexes."""
    x = to_simplicial_set(c)
    chi = euler_characteristic(x)
    assert euler_characteristic(symmetric_square(x).quotient) == (chi * chi + chi) // 2


def test_product_identities_hold():
    """Test that the product and quotient of a surface satisfy the simplicial identities."""
    pair = symmetric_square(sset_of("rp2"))
    pair.total.verify_identities()
    pair.quotient.verify_identities()
    pair.image_diagonal.verify_identities()
