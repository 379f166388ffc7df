"""Contains the product X×X with its swap involution, the symmetric square SP²(X) and the image diagonal dX."""

from dataclasses import dataclass
from itertools import combinations
from logging import getLogger
from typing import Dict
from typing import FrozenSet
from typing import Hashable
from typing import List
from typing import Optional
from typing import Tuple

from symtc.topology.simplicial import Face
from symtc.topology.simplicial import SimplicialSet
from symtc.topology.simplicial import SSetMap
from symtc.topology.simplicial import Word

# Set the default logger for the symtc engine
logger = getLogger(__name__)

# A component of a product simplex: a nondegenerate simplex id of X with the degeneracy word applied to it
ComponentKey = Tuple[int, Word]

# The key of a product simplex: its two components
ProductKey = Tuple[ComponentKey, ComponentKey]


@dataclass(frozen=True)
class ProductSimplex:
    """Represents an m-simplex of X×X as a pair of possibly degenerate m-simplices of X."""

    # The dimension m of the product simplex
    dimension: int

    # The first component, as (nondegenerate id of X, degeneracy word)
    first: ComponentKey

    # The second component, as (nondegenerate id of X, degeneracy word)
    second: ComponentKey

    @property
    def jointly_nondegenerate(self) -> bool:
        """Return True if no degeneracy operator can be stripped from both components at once."""
        return not set(self.first[1]) & set(self.second[1])

    @property
    def key(self) -> ProductKey:
        """Return the encoding of the simplex used as its key in the product."""
        return self.first, self.second

    def swapped(self) -> "ProductSimplex":
        """Return the image of the simplex under the coordinate swap."""
        return ProductSimplex(self.dimension, self.second, self.first)


@dataclass(frozen=True)
class OrbitSimplex:
    """Represents a simplex of SP²(X): an orbit of product simplices under the swap."""

    # The canonical representative: the lexicographically smaller of the two encodings
    representative: ProductSimplex

    @property
    def on_diagonal(self) -> bool:
        """Return True if the orbit lies in dX, i.e. both components are equal."""
        return self.representative.first == self.representative.second

    @staticmethod
    def of(simplex: ProductSimplex) -> "OrbitSimplex":
        """Return the orbit of a product simplex, with its canonical representative."""
        other = simplex.swapped()
        return OrbitSimplex(simplex if simplex.key <= other.key else other)


@dataclass
class EquivariantPair:  # pylint: disable=too-many-instance-attributes
    """Bundles X×X with its involution and, once the quotient is built, SP²(X), dX and the maps between them."""

    # The input simplicial set X
    base: SimplicialSet

    # The product X×X
    total: SimplicialSet

    # The coordinate swap on X×X
    involution: SSetMap

    # The diagonal map X → X×X, σ ↦ (σ, σ)
    diagonal: Optional[SSetMap] = None

    # The diagonal subcomplex ΔX of X×X and its inclusion
    diagonal_subset: Optional[SimplicialSet] = None
    diagonal_inclusion: Optional[SSetMap] = None

    # The symmetric square SP²(X) and the orbit projection ρ: X×X → SP²(X)
    quotient: Optional[SimplicialSet] = None
    projection: Optional[SSetMap] = None

    # The image diagonal dX, its inclusion into SP²(X), and the isomorphism X ≅ dX
    image_diagonal: Optional[SimplicialSet] = None
    image_diagonal_inclusion: Optional[SSetMap] = None
    image_diagonal_iso: Optional[SSetMap] = None

    def product_simplex(self, m: int, simplex: int) -> ProductSimplex:
        """Return the product simplex with the given id in grade m."""
        first, second = self.total.key(m, simplex)  # type: ignore[misc]
        return ProductSimplex(m, first, second)

    def orbit_simplex(self, m: int, orbit: int) -> OrbitSimplex:
        """Return the orbit simplex with the given id in grade m of the quotient."""
        if self.quotient is None:
            raise ValueError("orbit_simplex: The symmetric square has not been built.")
        first, second = self.quotient.key(m, orbit)  # type: ignore[misc]
        return OrbitSimplex(ProductSimplex(m, first, second))


def _renumber(word: Word, common: List[int]) -> Word:
    """Express a degeneracy word through the surjection left after collapsing the common positions.

    Arguments:
    word (Word):            The canonical word of one component.
    common (List[int]):     The positions collapsed in both components.

    Returns:    The word of the component once the common degeneracies are stripped.
    """
    return tuple(t - sum(1 for c in common if c < t) for t in word if t not in common)


def _resolve(index: List[Dict[Hashable, int]], m: int, first: ComponentKey, second: ComponentKey) -> Face:
    """Resolve a pair of m-simplices of X to a nondegenerate product simplex and a degeneracy word.

    Arguments:
    index (List[Dict]):         The key-to-id tables of the product grades built so far.
    m (int):                    The dimension of the pair.
    first (ComponentKey):       The first component.
    second (ComponentKey):      The second component.

    Returns:    The id of the nondegenerate product simplex and the common degeneracy word stripped from the pair.
    """
    common = sorted(set(first[1]) & set(second[1]))
    if not common:
        return index[m][(first, second)], ()
    stripped = ((first[0], _renumber(first[1], common)), (second[0], _renumber(second[1], common)))
    return index[m - len(common)][stripped], tuple(reversed(common))


def product_with_swap(x: SimplicialSet) -> EquivariantPair:
    """Build X×X with the coordinate-swap involution.

    The nondegenerate m-simplices of the product are the pairs (s_I σ, s_J τ) with σ, τ nondegenerate simplices of X,
    |I| = m - dim σ, |J| = m - dim τ and I, J disjoint. Faces act componentwise and common degeneracies are stripped.

    Arguments:
    x (SimplicialSet):  The simplicial set X.

    Returns:    An equivariant pair with the total space and the involution populated.
    """
    keys: List[List[ProductKey]] = []
    faces: List[List[Tuple[Face, ...]]] = []
    index: List[Dict[Hashable, int]] = []
    for m in range(2 * x.dimension + 1):
        # First, enumerate the jointly nondegenerate pairs of grade m in a fixed order
        grade: List[ProductKey] = []
        for p in range(min(m, x.dimension) + 1):
            for q in range(min(m, x.dimension) + 1):
                if p + q < m:
                    continue
                for first_positions in combinations(range(m), m - p):
                    free = [t for t in range(m) if t not in first_positions]
                    for second_positions in combinations(free, m - q):
                        first_word = tuple(reversed(first_positions))
                        second_word = tuple(reversed(second_positions))
                        grade.extend(
                            ((s, first_word), (t, second_word)) for s in range(x.count(p)) for t in range(x.count(q))
                        )
        keys.append(grade)
        index.append({key: i for i, key in enumerate(grade)})

        # Next, resolve the componentwise faces against the grades already built
        grade_faces: List[Tuple[Face, ...]] = []
        for (s, first_word), (t, second_word) in grade:
            if m == 0:
                grade_faces.append(())
                continue
            resolved = []
            for i in range(m + 1):
                first = x.face_of(m - len(first_word), s, first_word, i)
                second = x.face_of(m - len(second_word), t, second_word, i)
                resolved.append(_resolve(index, m - 1, first, second))
            grade_faces.append(tuple(resolved))
        faces.append(grade_faces)

    # Finally, build the product and its involution
    total = SimplicialSet(keys, faces, f"{x.name}x{x.name}")
    swap = [[(index[m][(second, first)], ()) for first, second in grade] for m, grade in enumerate(keys)]
    involution = SSetMap(total, total, swap[: total.dimension + 1], "swap")
    logger.info(f"product_with_swap: built '{total.name}' with grades {total.grades}.")
    return EquivariantPair(base=x, total=total, involution=involution)


def diagonal_map(x: SimplicialSet, pair: Optional[EquivariantPair] = None) -> SSetMap:
    """Build the diagonal map X → X×X, σ ↦ (σ, σ).

    Arguments:
    x (SimplicialSet):      The simplicial set X.
    pair (EquivariantPair): A product already built for X; a new one is built if omitted.

    Returns:    The diagonal map, whose image is the fixed-point subcomplex of the swap.
    """
    total = (pair or product_with_swap(x)).total
    images = [[(total.lookup(k, ((s, ()), (s, ()))), ()) for s in range(x.count(k))] for k in range(x.dimension + 1)]
    return SSetMap(x, total, images, "diagonal")


def symmetric_square(x: SimplicialSet) -> EquivariantPair:
    """Build SP²(X) as the orbit simplicial set of X×X under the swap, together with dX and the canonical maps.

    Arguments:
    x (SimplicialSet):  The simplicial set X.

    Returns:    An equivariant pair with every field populated.
    """
    pair = product_with_swap(x)
    total = pair.total

    # First, collect the orbits grade by grade, in order of first appearance
    keys: List[List[ProductKey]] = []
    orbit_of: List[List[int]] = []
    for m in range(total.dimension + 1):
        found: Dict[ProductKey, int] = {}
        grade_orbits = []
        for simplex in range(total.count(m)):
            first, second = total.key(m, simplex)  # type: ignore[misc]
            representative = min((first, second), (second, first))
            grade_orbits.append(found.setdefault(representative, len(found)))
        keys.append(list(found))
        orbit_of.append(grade_orbits)

    # Next, the faces of an orbit are the orbits of the faces of its representative
    faces = []
    for m, grade in enumerate(keys):
        faces.append(
            [
                tuple(
                    (orbit_of[m - 1 - len(word)][target], word)
                    for target, word in total.faces(m, total.lookup(m, representative))
                )
                if m
                else ()
                for representative in grade
            ]
        )
    quotient = SimplicialSet(keys, faces, f"SP2({x.name})")
    projection = SSetMap(total, quotient, [[(o, ()) for o in grade] for grade in orbit_of], "rho")

    # Now, cut out the diagonal pieces on both levels
    diagonal = diagonal_map(x, pair)
    delta_family: Tuple[FrozenSet[int], ...] = tuple(
        frozenset(diagonal.image(k, s)[0] for s in range(x.count(k))) for k in range(x.dimension + 1)
    )
    diagonal_subset, diagonal_inclusion = total.restrict(delta_family, f"Delta({x.name})")
    image_family: Tuple[FrozenSet[int], ...] = tuple(
        frozenset(o for o, (first, second) in enumerate(grade) if first == second) for grade in keys
    )
    image_diagonal, image_inclusion = quotient.restrict(image_family, f"d{x.name}")
    iso_images = [
        [(image_diagonal.lookup(k, ((s, ()), (s, ()))), ()) for s in range(x.count(k))] for k in range(x.dimension + 1)
    ]
    iso = SSetMap(x, image_diagonal, iso_images, "diagonal_iso")

    # Finally, record everything on the pair
    pair.diagonal = diagonal
    pair.diagonal_subset = diagonal_subset
    pair.diagonal_inclusion = diagonal_inclusion
    pair.quotient = quotient
    pair.projection = projection
    pair.image_diagonal = image_diagonal
    pair.image_diagonal_inclusion = image_inclusion
    pair.image_diagonal_iso = iso
    logger.info(
        f"symmetric_square: built '{quotient.name}' with grades {quotient.grades}; "
        f"'{image_diagonal.name}' has grades {image_diagonal.grades}."
    )
    return pair
