"""Contains normalized mod-2 cochain complexes of simplicial sets, absolute and relative."""

from logging import getLogger
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np
from Cryptodome.Hash import SHA256

from symtc.algebra.f2 import F2Matrix
from symtc.topology.simplicial import SimplicialSet
from symtc.topology.simplicial import Subcomplex
from symtc.utils.errors import InternalAssertionError

# Set the default logger for the symtc engine
logger = getLogger(__name__)


class CochainComplex:
    """Represents the normalized cochains of a simplicial set, optionally relative to a subcomplex.

    The generators of grade k are the nondegenerate k-simplices, minus those of the subcomplex in relative mode. A
    cochain is a 0/1 vector over the generators; in relative mode it is a cochain vanishing on the subcomplex. The
    coboundary δ_k has shape (n_{k+1}, n_k) and acts on column vectors.
    """

    def __init__(self, sset: SimplicialSet, rel: Optional[Subcomplex] = None, name: str = ""):
        """Create the cochain complex and check that δ∘δ = 0.

        Arguments:
        sset (SimplicialSet):   The underlying simplicial set.
        rel (Subcomplex):       The ids of a face-closed family of nondegenerate simplices, one set per grade. The
                                complex is absolute if this is omitted.
        name (str):             A label for the complex; defaults to the name of the simplicial set.

        Raises:
        SubcomplexError:        If rel is not closed under faces.
        InternalAssertionError: If some composite of coboundaries is nonzero.
        """
        if rel is not None:
            sset.check_subcomplex(rel, "cochain_complex")
        self._sset = sset
        self._rel = rel
        self._name = name or sset.name
        self._face_indices: Dict[Tuple[int, int, bool], np.ndarray] = {}

        # First, number the generators of each grade and record the position of every nondegenerate simplex
        self._generators: List[np.ndarray] = []
        self._positions: List[np.ndarray] = []
        for k in range(sset.dimension + 1):
            excluded = rel[k] if rel is not None and k < len(rel) else frozenset()
            generators = np.array([s for s in range(sset.count(k)) if s not in excluded], dtype=np.int64)
            positions = np.full(sset.count(k), -1, dtype=np.int64)
            positions[generators] = np.arange(generators.size)
            self._generators.append(generators)
            self._positions.append(positions)

        # Next, build the coboundaries
        self._coboundaries = [self._build_coboundary(k) for k in range(sset.dimension + 1)]

        # Finally, check that the coboundaries compose to zero
        for k in range(sset.dimension - 1):
            if not (self._coboundaries[k + 1] @ self._coboundaries[k]).is_zero():
                raise InternalAssertionError("cochain_complex", f"δ_{k + 1} ∘ δ_{k} is nonzero on '{self._name}'.")
        logger.debug(f"cochain_complex: built '{self._name}' with generator counts {self.generator_counts}.")

    @property
    def sset(self) -> SimplicialSet:
        """Return the underlying simplicial set."""
        return self._sset

    @property
    def rel(self) -> Optional[Subcomplex]:
        """Return the subcomplex of a relative complex, or None."""
        return self._rel

    @property
    def relative(self) -> bool:
        """Return True if the complex is relative to a subcomplex."""
        return self._rel is not None

    @property
    def name(self) -> str:
        """Return the label of the complex."""
        return self._name

    @property
    def dimension(self) -> int:
        """Return the top grade of the underlying simplicial set."""
        return self._sset.dimension

    @property
    def generator_counts(self) -> Tuple[int, ...]:
        """Return the number of generators in each grade."""
        return tuple(int(generators.size) for generators in self._generators)

    def count(self, k: int) -> int:
        """Return the number of generators of grade k (zero outside the grade range)."""
        return int(self._generators[k].size) if 0 <= k <= self.dimension else 0

    def generators(self, k: int) -> np.ndarray:
        """Return the simplex ids of the generators of grade k, in generator order."""
        return self._generators[k] if 0 <= k <= self.dimension else np.zeros(0, dtype=np.int64)

    def position(self, k: int, simplex: int) -> int:
        """Return the generator index of a nondegenerate simplex, or -1 if it lies in the subcomplex."""
        return int(self._positions[k][simplex])

    def coboundary(self, k: int) -> F2Matrix:
        """Return δ_k: C^k → C^{k+1} as a matrix of shape (n_{k+1}, n_k); zero-sized outside the grade range."""
        if 0 <= k <= self.dimension:
            return self._coboundaries[k]
        return F2Matrix.zeros(self.count(k + 1), self.count(k))

    def _build_coboundary(self, k: int) -> F2Matrix:
        """Build δ_k as the transpose of the mod-2 boundary, dropping degenerate faces and subcomplex faces."""
        upper = self.count(k + 1)
        matrix = np.zeros((upper, self.count(k)), dtype=np.uint8)
        for row, simplex in enumerate(self.generators(k + 1)):
            for target, word in self._sset.faces(k + 1, int(simplex)):
                if word:
                    continue
                col = self._positions[k][target]
                if col >= 0:
                    matrix[row, col] ^= 1
        return F2Matrix.from_array(matrix)

    def _face_index(self, n: int, p: int, front: bool) -> np.ndarray:
        """Return, for each generator of grade n, the generator index of its front (or back) p-face, or -1."""
        result = np.full(self.count(n), -1, dtype=np.int64)
        for row, simplex in enumerate(self.generators(n)):
            if front:
                target, word = self._sset.front_face(n, int(simplex), p)
            else:
                target, word = self._sset.back_face(n, int(simplex), p)
            if not word:
                result[row] = self._positions[p][target]
        return result

    def front_index(self, n: int, p: int) -> np.ndarray:
        """Return the front p-face index array of the grade-n generators (-1 for degenerate or subcomplex faces)."""
        key = (n, p, True)
        if key not in self._face_indices:
            self._face_indices[key] = self._face_index(n, p, True)
        return self._face_indices[key]

    def back_index(self, n: int, q: int) -> np.ndarray:
        """Return the back q-face index array of the grade-n generators (-1 for degenerate or subcomplex faces)."""
        key = (n, q, False)
        if key not in self._face_indices:
            self._face_indices[key] = self._face_index(n, q, False)
        return self._face_indices[key]

    def fingerprint(self) -> str:
        """Return a SHA256 hex digest identifying the complex by its simplicial set and subcomplex."""
        hashed = SHA256.new()
        hashed.update(self._sset.fingerprint().encode("UTF-8"))
        if self._rel is not None:
            hashed.update(repr([sorted(grade) for grade in self._rel]).encode("UTF-8"))
        return hashed.hexdigest()


def cochain_complex(s: SimplicialSet, rel: Optional[Subcomplex] = None, name: str = "") -> CochainComplex:
    """Build the normalized cochain complex of a simplicial set, relative to a subcomplex if one is given.

    Arguments:
    s (SimplicialSet):  The simplicial set.
    rel (Subcomplex):   The ids of a face-closed family of nondegenerate simplices, one set per grade.
    name (str):         A label for the complex.

    Returns:    The cochain complex.
    """
    return CochainComplex(s, rel, name)
