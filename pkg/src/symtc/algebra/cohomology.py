"""Contains mod-2 cohomology rings, the Alexander-Whitney cup product and induced maps."""

from logging import getLogger
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np

from symtc.algebra.cochains import CochainComplex
from symtc.algebra.f2 import CosetCoordinates
from symtc.algebra.f2 import F2Matrix
from symtc.algebra.f2 import Subspace
from symtc.algebra.f2 import image
from symtc.algebra.f2 import kernel
from symtc.algebra.f2 import quotient_basis
from symtc.topology.simplicial import SSetMap
from symtc.utils.cache import MatrixCache
from symtc.utils.cache import cache_key
from symtc.utils.errors import ContainmentError
from symtc.utils.errors import MixedRingError
from symtc.utils.errors import ShapeMismatchError

# Set the default logger for the symtc engine
logger = getLogger(__name__)


def _gather(rows: np.ndarray, index: np.ndarray) -> np.ndarray:
    """Evaluate cochains (one per row) on the faces named by an index array, reading -1 as zero."""
    padded = np.hstack([rows, np.zeros((rows.shape[0], 1), dtype=np.uint8)])
    return padded[:, index]


class CohomologyClass:
    """Represents an element of a cohomology ring: a grade and coordinates in the basis of that grade."""

    def __init__(self, ring: "CohomologyRing", grade: int, coords: Sequence[int]):
        """Create a new class.

        Arguments:
        ring (CohomologyRing):  The ring the class belongs to.
        grade (int):            The grade of the class.
        coords (Sequence[int]): The coordinates of the class in the basis of the grade.
        """
        vector = np.asarray(coords, dtype=np.uint8).reshape(-1) & 1
        if vector.size != ring.betti_number(grade):
            raise ShapeMismatchError("CohomologyClass", (ring.betti_number(grade),), (vector.size,))
        self._ring = ring
        self._grade = grade
        self._coords = vector

    @property
    def ring(self) -> "CohomologyRing":
        """Return the ring of the class."""
        return self._ring

    @property
    def grade(self) -> int:
        """Return the grade of the class."""
        return self._grade

    @property
    def coords(self) -> np.ndarray:
        """Return the coordinates of the class."""
        return self._coords

    def is_zero(self) -> bool:
        """Return True if the class is zero."""
        return not self._coords.any()

    def cochain(self) -> np.ndarray:
        """Return a representative cocycle of the class."""
        reps = self._ring.representatives(self._grade).to_array()
        return (self._coords.astype(np.int64) @ reps.astype(np.int64) % 2).astype(np.uint8)

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        """Return the sum of two classes of the same grade."""
        if other.ring is not self._ring:
            raise MixedRingError("add", self._ring.name, other.ring.name)
        if other.grade != self._grade:
            raise ShapeMismatchError("add", (self._grade,), (other.grade,))
        return CohomologyClass(self._ring, self._grade, self._coords ^ other.coords)

    def __mul__(self, other: "CohomologyClass") -> "CohomologyClass":
        """Return the cup product of two classes."""
        return cup(self, other)

    def __eq__(self, other: object) -> bool:
        """Return True if both classes belong to the same ring and agree."""
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        same = other.ring is self._ring and other.grade == self._grade
        return same and bool(np.array_equal(self._coords, other.coords))

    def __hash__(self) -> int:
        """Return a hash of the grade and coordinates."""
        return hash((id(self._ring), self._grade, self._coords.tobytes()))

    def __repr__(self) -> str:
        """Return a short description of the class."""
        return f"CohomologyClass({self._ring.name}, grade={self._grade}, coords={self._coords.tolist()})"


class CohomologyRing:
    """Represents the mod-2 cohomology ring of a cochain complex.

    Grade k carries a basis of coset representatives of Z^k / B^k and a coordinate table that expresses any cocycle in
    that basis. Products of basis classes are collected into multiplication tensors, one per bidegree (p, q), of shape
    (b_p, b_q, b_{p+q}); tensors are computed on first use.
    """

    def __init__(self, complex_: CochainComplex, representatives: List[F2Matrix], tables: List[CosetCoordinates]):
        """Create a new ring from its basis data. Use cohomology to compute the basis data.

        Arguments:
        complex_ (CochainComplex):              The cochain complex.
        representatives (List[F2Matrix]):       The representative cocycles of each grade, one per row.
        tables (List[CosetCoordinates]):        The coordinate table of each grade.
        """
        self._complex = complex_
        self._representatives = representatives
        self._tables = tables
        self._tensors: Dict[Tuple[int, int], np.ndarray] = {}

    @property
    def complex(self) -> CochainComplex:
        """Return the cochain complex of the ring."""
        return self._complex

    @property
    def name(self) -> str:
        """Return the label of the ring."""
        return self._complex.name

    @property
    def relative(self) -> bool:
        """Return True if the ring is the cohomology of a pair."""
        return self._complex.relative

    @property
    def dimension(self) -> int:
        """Return the top grade of the ring."""
        return self._complex.dimension

    @property
    def betti(self) -> Tuple[int, ...]:
        """Return the mod-2 Betti numbers, grade by grade."""
        return tuple(reps.rows for reps in self._representatives)

    def betti_number(self, k: int) -> int:
        """Return the Betti number of grade k (zero outside the grade range)."""
        return self._representatives[k].rows if 0 <= k <= self.dimension else 0

    def representatives(self, k: int) -> F2Matrix:
        """Return the representative cocycles of grade k, one per row."""
        if 0 <= k <= self.dimension:
            return self._representatives[k]
        return F2Matrix.zeros(0, self._complex.count(k))

    def table(self, k: int) -> CosetCoordinates:
        """Return the coordinate table of grade k."""
        return self._tables[k]

    def basis(self, k: int) -> List[CohomologyClass]:
        """Return the basis classes of grade k."""
        size = self.betti_number(k)
        return [CohomologyClass(self, k, np.eye(size, dtype=np.uint8)[i]) for i in range(size)]

    def zero(self, k: int) -> CohomologyClass:
        """Return the zero class of grade k."""
        return CohomologyClass(self, k, np.zeros(self.betti_number(k), dtype=np.uint8))

    def coordinates(self, k: int, cocycles: np.ndarray) -> np.ndarray:
        """Express cocycles of grade k (one per row) in the basis of the grade.

        Raises:
        ContainmentError:   If some row is not a cocycle.
        """
        rows = np.atleast_2d(np.asarray(cocycles, dtype=np.uint8))
        if rows.shape[1] != self._complex.count(k):
            raise ShapeMismatchError("coordinates", (rows.shape[0], self._complex.count(k)), rows.shape)
        if not 0 <= k <= self.dimension:
            return np.zeros((rows.shape[0], 0), dtype=np.uint8)
        matrix = F2Matrix.from_array(rows)
        if not (matrix @ self._complex.coboundary(k).transpose()).is_zero():
            raise ContainmentError("class_of", f"Cochain of grade {k} is not a cocycle of '{self.name}'.")
        return self._tables[k].coordinates(matrix)

    def class_of(self, k: int, cocycle: Sequence[int]) -> CohomologyClass:
        """Return the class of a cocycle of grade k."""
        return CohomologyClass(self, k, self.coordinates(k, np.asarray(cocycle, dtype=np.uint8))[0])

    @property
    def unit(self) -> Optional[CohomologyClass]:
        """Return the unit class (the all-ones 0-cochain), or None for a relative ring."""
        if self.relative or self.dimension < 0:
            return None
        return self.class_of(0, np.ones(self._complex.count(0), dtype=np.uint8))

    def cup_cochains(self, p: int, q: int, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Compute the Alexander-Whitney products of cochains on the grade-(p + q) generators.

        Arguments:
        p (int):            The grade of the left factors.
        q (int):            The grade of the right factors.
        left (np.ndarray):  The left factors, one per row.
        right (np.ndarray): The right factors, one per row.

        Returns:    An array of shape (rows of left, rows of right, n_{p+q}) whose entry (i, j) is left[i] ∪ right[j]:
                    its value on a simplex is left[i] on the front p-face times right[j] on the back q-face.
        """
        n = p + q
        front = _gather(left, self._complex.front_index(n, p))
        back = _gather(right, self._complex.back_index(n, q))
        return front[:, None, :] & back[None, :, :]

    def tensor(self, p: int, q: int) -> np.ndarray:
        """Return the multiplication tensor of bidegree (p, q), computing it on first use.

        Returns:    An array of shape (b_p, b_q, b_{p+q}) whose entry (i, j) holds the coordinates of e_i · e_j.
        """
        if (p, q) not in self._tensors:
            rows, cols, size = self.betti_number(p), self.betti_number(q), self.betti_number(p + q)
            if rows and cols and size:
                products = self.cup_cochains(
                    p, q, self.representatives(p).to_array(), self.representatives(q).to_array()
                )
                coords = self.coordinates(p + q, products.reshape(rows * cols, -1))
                self._tensors[(p, q)] = coords.reshape(rows, cols, size)
            else:
                self._tensors[(p, q)] = np.zeros((rows, cols, size), dtype=np.uint8)
            logger.debug(f"tensor: computed bidegree ({p}, {q}) of '{self.name}'.")
        return self._tensors[(p, q)]

    def tensors(self) -> Dict[Tuple[int, int], np.ndarray]:
        """Return every multiplication tensor in positive bidegrees with p + q within the grade range."""
        top = self.dimension
        return {(p, q): self.tensor(p, q) for p in range(1, top + 1) for q in range(1, top + 1 - p)}

    def multiply(self, p: int, q: int, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Multiply classes given by coordinates, row by row against row.

        Arguments:
        p (int):            The grade of the left classes.
        q (int):            The grade of the right classes.
        left (np.ndarray):  Coordinates of left classes, shape (r, b_p).
        right (np.ndarray): Coordinates of right classes, shape (s, b_q).

        Returns:    The coordinates of every product, shape (r, s, b_{p+q}).
        """
        table = self.tensor(p, q).astype(np.int64)
        products = np.einsum("ai,bj,ijk->abk", left.astype(np.int64), right.astype(np.int64), table)
        return (products % 2).astype(np.uint8)


def cohomology(c: CochainComplex, cache: Optional[MatrixCache] = None, tag: str = "") -> CohomologyRing:
    """Compute the mod-2 cohomology of a cochain complex: Betti numbers and representative cocycles.

    Arguments:
    c (CochainComplex):     The cochain complex.
    cache (MatrixCache):    A cache holding previously computed basis data; filled on a miss.
    tag (str):              A label for the cache entry.

    Returns:    The cohomology ring, with multiplication tensors filled on demand.
    """
    key = cache_key(c.fingerprint(), tag or c.name) if cache is not None else ""
    stored = cache.load(key) if cache is not None else None
    if stored is not None:
        representatives = [F2Matrix.from_array(stored[f"reps_{k}"]) for k in range(c.dimension + 1)]
        tables = [
            CosetCoordinates(c.count(k), stored[f"bpiv_{k}"], stored[f"rpiv_{k}"], stored[f"transfer_{k}"])
            for k in range(c.dimension + 1)
        ]
        logger.info(f"cohomology: loaded '{c.name}' from the cache.")
        return CohomologyRing(c, representatives, tables)

    # First, reduce each grade to representatives and a coordinate table
    representatives, tables = [], []
    for k in range(c.dimension + 1):
        cocycles = kernel(c.coboundary(k))
        coboundaries = image(c.coboundary(k - 1)) if k > 0 else Subspace.zero(c.count(k))
        reps = quotient_basis(cocycles, coboundaries)
        representatives.append(reps)
        tables.append(CosetCoordinates.build(coboundaries, reps))
    ring = CohomologyRing(c, representatives, tables)
    logger.info(f"cohomology: '{c.name}' has Betti numbers {ring.betti}.")

    # Finally, write the basis data back to the cache
    if cache is not None:
        arrays: Dict[str, np.ndarray] = {}
        for k, (reps, table) in enumerate(zip(representatives, tables)):
            arrays[f"reps_{k}"] = reps.to_array()
            arrays[f"bpiv_{k}"], arrays[f"rpiv_{k}"], arrays[f"transfer_{k}"] = table.arrays()
        cache.store(key, tag or c.name, arrays)
    return ring


def cup(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    """Return the Alexander-Whitney cup product of two classes of the same ring.

    Raises:
    MixedRingError: If the classes belong to different rings.
    """
    if a.ring is not b.ring:
        raise MixedRingError("cup", a.ring.name, b.ring.name)
    ring = a.ring
    coords = ring.multiply(a.grade, b.grade, a.coords.reshape(1, -1), b.coords.reshape(1, -1))
    return CohomologyClass(ring, a.grade + b.grade, coords[0, 0])


class InducedMap:
    """Represents the map on cohomology induced by a simplicial map, acting on row vectors of coordinates.

    For f: S → T the induced map goes from the ring of T (the domain) to the ring of S (the codomain). The matrix of
    grade k has one row per basis class of the domain, holding the coordinates of its pullback.
    """

    def __init__(self, domain: CohomologyRing, codomain: CohomologyRing, matrices: List[np.ndarray], name: str = ""):
        """Create a new induced map.

        Arguments:
        domain (CohomologyRing):    The ring the map starts from.
        codomain (CohomologyRing):  The ring the map lands in.
        matrices (List[np.ndarray]):The matrix of each grade, of shape (domain Betti, codomain Betti).
        name (str):                 A label for the map, used in logs and reports.
        """
        self._domain = domain
        self._codomain = codomain
        self._matrices = [np.asarray(matrix, dtype=np.uint8) for matrix in matrices]
        self._name = name

    @property
    def domain(self) -> CohomologyRing:
        """Return the ring the map starts from."""
        return self._domain

    @property
    def codomain(self) -> CohomologyRing:
        """Return the ring the map lands in."""
        return self._codomain

    @property
    def name(self) -> str:
        """Return the label of the map."""
        return self._name

    @property
    def grades(self) -> int:
        """Return the number of grades carried by the map."""
        return len(self._matrices)

    def matrix(self, k: int) -> np.ndarray:
        """Return the matrix of grade k; zero-sized outside the grade range."""
        if 0 <= k < len(self._matrices):
            return self._matrices[k]
        return np.zeros((self._domain.betti_number(k), self._codomain.betti_number(k)), dtype=np.uint8)

    def apply(self, x: CohomologyClass) -> CohomologyClass:
        """Return the image of a class of the domain."""
        if x.ring is not self._domain:
            raise MixedRingError("apply", self._domain.name, x.ring.name)
        coords = x.coords.astype(np.int64) @ self.matrix(x.grade).astype(np.int64) % 2
        return CohomologyClass(self._codomain, x.grade, coords)

    def kernel(self, k: int) -> Subspace:
        """Return the kernel in grade k as a subspace of coordinate vectors of the domain."""
        return kernel(F2Matrix.from_array(self.matrix(k).T))

    def image(self, k: int) -> Subspace:
        """Return the image in grade k as a subspace of coordinate vectors of the codomain."""
        return Subspace.from_vectors(F2Matrix.from_array(self.matrix(k)))

    def followed_by(self, after: "InducedMap") -> "InducedMap":
        """Return the composite that applies this map first and then another.

        Arguments:
        after (InducedMap): A map whose domain is the codomain of this map.
        """
        if after.domain is not self._codomain:
            raise MixedRingError("followed_by", self._codomain.name, after.domain.name)
        grades = max(self.grades, after.grades)
        matrices = [
            (self.matrix(k).astype(np.int64) @ after.matrix(k).astype(np.int64) % 2).astype(np.uint8)
            for k in range(grades)
        ]
        return InducedMap(self._domain, after.codomain, matrices, f"{after.name}∘{self._name}")

    def __eq__(self, other: object) -> bool:
        """Return True if both maps connect the same rings with the same matrices."""
        if not isinstance(other, InducedMap):
            return NotImplemented
        grades = max(self.grades, other.grades)
        return (
            other.domain is self._domain
            and other.codomain is self._codomain
            and all(np.array_equal(self.matrix(k), other.matrix(k)) for k in range(grades))
        )

    __hash__ = None  # type: ignore[assignment]


def induced(f: SSetMap, domain: CohomologyRing, codomain: CohomologyRing, name: str = "") -> InducedMap:
    """Compute the map on cohomology induced by a simplicial map by pulling cocycles back.

    A cochain c on the target pulls back to the cochain σ ↦ c(f(σ)) on the source; simplices whose image is degenerate
    or lies in the subcomplex of the domain evaluate to zero.

    Arguments:
    f (SSetMap):                The simplicial map S → T.
    domain (CohomologyRing):    The ring of T (or of a pair on T).
    codomain (CohomologyRing):  The ring of S (or of a pair on S).
    name (str):                 A label for the map; defaults to the name of f.

    Returns:    The induced map from the domain to the codomain.
    """
    if domain.complex.sset is not f.target:
        raise MixedRingError("induced", f.target.name, domain.name)
    if codomain.complex.sset is not f.source:
        raise MixedRingError("induced", f.source.name, codomain.name)
    matrices = []
    for k in range(f.source.dimension + 1):
        index = np.full(codomain.complex.count(k), -1, dtype=np.int64)
        for col, simplex in enumerate(codomain.complex.generators(k)):
            target, word = f.image(k, int(simplex))
            if not word:
                index[col] = domain.complex.position(k, target)
        pulled = _gather(domain.representatives(k).to_array(), index)
        matrices.append(codomain.coordinates(k, pulled))
    result = InducedMap(domain, codomain, matrices, name or f.name)
    logger.debug(f"induced: '{result.name}' from '{domain.name}' to '{codomain.name}'.")
    return result


def exactness_holds(relative_to_absolute: InducedMap, restriction: InducedMap) -> bool:
    """Check that the image of H*(Y, A) → H*(Y) equals the kernel of H*(Y) → H*(A) in every grade.

    Arguments:
    relative_to_absolute (InducedMap):  The map from the relative ring into the absolute ring.
    restriction (InducedMap):           The map from the absolute ring to the ring of the subcomplex.

    Returns:    True if the sequence is exact at the absolute ring in every grade.
    """
    if relative_to_absolute.codomain is not restriction.domain:
        raise MixedRingError("exactness_holds", relative_to_absolute.codomain.name, restriction.domain.name)
    for k in range(restriction.domain.dimension + 1):
        if relative_to_absolute.image(k) != restriction.kernel(k):
            logger.warning(f"exactness_holds: sequence is not exact in grade {k}.")
            return False
    return True
