"""Contains finite simplicial sets, simplicial maps and the degeneracy calculus they rest on.

A simplex of a simplicial set is stored as a nondegenerate simplex, identified by its dimension and an integer id,
together with a degeneracy word. Words are kept in the canonical form s_{j_1} s_{j_2} ... s_{j_k} with
j_1 > j_2 > ... > j_k, stored as the tuple (j_1, ..., j_k); the empty tuple is the identity. For a degenerate simplex
of dimension m the entries of its word are exactly the positions i < m at which vertex i and vertex i + 1 coincide.
"""

from logging import getLogger
from typing import Dict
from typing import FrozenSet
from typing import Hashable
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from Cryptodome.Hash import SHA256

from symtc.types.complex import Complex
from symtc.utils.errors import InternalAssertionError
from symtc.utils.errors import SubcomplexError

# Set the default logger for the symtc engine
logger = getLogger(__name__)

# A canonical degeneracy word
Word = Tuple[int, ...]

# A face entry: the id of a nondegenerate simplex together with the degeneracy word applied to it
Face = Tuple[int, Word]

# A family of nondegenerate simplex ids, one set per grade
Subcomplex = Tuple[FrozenSet[int], ...]


def normalize_word(word: Sequence[int]) -> Word:
    """Put a composite of degeneracy operators into canonical (strictly decreasing) form.

    The composite is read as operators, so the last entry is applied first. Adjacent pairs are rewritten with the
    identity s_i s_j = s_{j+1} s_i (i <= j) until the word is strictly decreasing.

    Arguments:
    word (Sequence[int]):   The composite to normalize.

    Returns:    The canonical word.
    """
    items = list(word)
    changed = True
    while changed:
        changed = False
        for pos in range(len(items) - 1):
            if items[pos] <= items[pos + 1]:
                items[pos], items[pos + 1] = items[pos + 1] + 1, items[pos]
                changed = True
    return tuple(items)


def push_face(i: int, word: Word) -> Tuple[Word, Optional[int]]:
    """Move the face operator d_i past a canonical degeneracy word.

    Uses the simplicial identities d_i s_j = s_{j-1} d_i (i < j), d_i s_j = id (i = j, j + 1) and
    d_i s_j = s_j d_{i-1} (i > j + 1).

    Arguments:
    i (int):        The index of the face operator.
    word (Word):    The canonical degeneracy word it is applied to.

    Returns:
    Word:           The degeneracy word left after moving the face operator to the right.
    Optional[int]:  The index of the face that must still be applied to the nondegenerate simplex, or None if the
                    face operator cancelled against a degeneracy.
    """
    out: List[int] = []
    for pos, j in enumerate(word):
        if i < j:
            out.append(j - 1)
        elif i in (j, j + 1):
            return normalize_word(out + list(word[pos + 1 :])), None
        else:
            out.append(j)
            i -= 1
    return normalize_word(out), i


class SimplicialSet:
    """Represents a finite simplicial set through its nondegenerate simplices and their face tables.

    Every nondegenerate simplex carries a hashable key (a vertex tuple for complexes, an encoded pair for products,
    an orbit representative for quotients) so that constructions can look simplices up by content. The face table
    records, for each nondegenerate simplex and each index i, the face d_i resolved to a nondegenerate simplex and a
    degeneracy word.
    """

    def __init__(self, keys: Sequence[Sequence[Hashable]], faces: Sequence[Sequence[Tuple[Face, ...]]], name: str = ""):
        """Create a new simplicial set from its keys and face tables.

        Arguments:
        keys (Sequence[Sequence[Hashable]]):        The keys of the nondegenerate simplices, one list per grade.
        faces (Sequence[Sequence[Tuple[Face]]]):    The faces of each nondegenerate simplex, one list per grade.
                                                    Simplices of grade k have k + 1 faces (none in grade 0).
        name (str):                                 A label for the simplicial set, used in logs and reports.
        """
        # Trailing empty grades do not count towards the dimension
        top = len(keys)
        while top > 0 and not keys[top - 1]:
            top -= 1
        self._keys: Tuple[Tuple[Hashable, ...], ...] = tuple(tuple(grade) for grade in keys[:top])
        self._faces: Tuple[Tuple[Tuple[Face, ...], ...], ...] = tuple(tuple(grade) for grade in faces[:top])
        self._index: List[Dict[Hashable, int]] = [{key: i for i, key in enumerate(grade)} for grade in self._keys]
        self._name = name

    @property
    def name(self) -> str:
        """Return the label of the simplicial set."""
        return self._name

    @property
    def dimension(self) -> int:
        """Return the top nonempty grade (-1 for the empty simplicial set)."""
        return len(self._keys) - 1

    @property
    def grades(self) -> Tuple[int, ...]:
        """Return the number of nondegenerate simplices in each grade."""
        return tuple(len(grade) for grade in self._keys)

    def count(self, k: int) -> int:
        """Return the number of nondegenerate k-simplices."""
        return len(self._keys[k]) if 0 <= k <= self.dimension else 0

    def keys(self, k: int) -> Tuple[Hashable, ...]:
        """Return the keys of the nondegenerate k-simplices, in id order."""
        return self._keys[k] if 0 <= k <= self.dimension else ()

    def key(self, k: int, simplex: int) -> Hashable:
        """Return the key of a nondegenerate simplex."""
        return self._keys[k][simplex]

    def lookup(self, k: int, key: Hashable) -> int:
        """Return the id of the nondegenerate k-simplex with the given key.

        Raises:
        KeyError:   If no such simplex exists.
        """
        if not 0 <= k <= self.dimension:
            raise KeyError(key)
        return self._index[k][key]

    def faces(self, k: int, simplex: int) -> Tuple[Face, ...]:
        """Return the resolved faces d_0, ..., d_k of a nondegenerate k-simplex."""
        return self._faces[k][simplex]

    def face(self, k: int, simplex: int, i: int) -> Face:
        """Return the resolved face d_i of a nondegenerate k-simplex."""
        return self._faces[k][simplex][i]

    def face_of(self, k: int, simplex: int, word: Word, i: int) -> Face:
        """Return the face d_i of the possibly degenerate simplex s_word(simplex).

        Arguments:
        k (int):        The dimension of the nondegenerate simplex.
        simplex (int):  The id of the nondegenerate simplex.
        word (Word):    The canonical degeneracy word applied to it.
        i (int):        The index of the face.

        Returns:    The face, as a nondegenerate simplex id and the degeneracy word applied to it. The dimension of the
                    face is k + len(word) - 1, so the nondegenerate part has dimension k + len(word) - 1 - len(result).
        """
        rest, j = push_face(i, word)
        if j is None:
            return simplex, rest
        target, inner = self._faces[k][simplex][j]
        return target, normalize_word(rest + inner)

    def iterated_face(self, n: int, simplex: int, indices: Iterable[int], word: Word = ()) -> Face:
        """Apply a sequence of face operators to s_word(simplex), the first index being applied first.

        Arguments:
        n (int):                The total dimension of s_word(simplex).
        simplex (int):          The id of the nondegenerate simplex.
        indices (Iterable[int]):The face indices, in order of application.
        word (Word):            The canonical degeneracy word applied to the simplex.

        Returns:    The resulting simplex as a nondegenerate id and a degeneracy word.
        """
        for i in indices:
            simplex, word = self.face_of(n - len(word), simplex, word, i)
            n -= 1
        return simplex, word

    def front_face(self, n: int, simplex: int, p: int) -> Face:
        """Return the front p-face (vertices 0, ..., p) of a nondegenerate n-simplex."""
        return self.iterated_face(n, simplex, range(n, p, -1))

    def back_face(self, n: int, simplex: int, q: int) -> Face:
        """Return the back q-face (vertices n - q, ..., n) of a nondegenerate n-simplex."""
        return self.iterated_face(n, simplex, [0] * (n - q))

    def verify_identities(self) -> None:
        """Check that the stored face tables satisfy d_i d_j = d_{j-1} d_i for all i < j.

        Raises:
        InternalAssertionError: If a face table entry is out of range or an identity fails.
        """
        for k in range(1, self.dimension + 1):
            for simplex in range(self.count(k)):
                faces = self._faces[k][simplex]
                if len(faces) != k + 1:
                    raise InternalAssertionError(
                        "verify_identities", f"simplex {simplex} in grade {k} has {len(faces)} faces"
                    )
                for target, word in faces:
                    if not 0 <= target < self.count(k - 1 - len(word)):
                        raise InternalAssertionError(
                            "verify_identities", f"face of simplex {simplex} in grade {k} points outside the set"
                        )
                if k < 2:
                    continue
                for j in range(1, k + 1):
                    for i in range(j):
                        left = self.iterated_face(k, simplex, (j, i))
                        right = self.iterated_face(k, simplex, (i, j - 1))
                        if left != right:
                            raise InternalAssertionError(
                                "verify_identities",
                                f"d_{i} d_{j} != d_{j - 1} d_{i} on simplex {simplex} in grade {k} of '{self._name}'",
                            )

    def check_subcomplex(self, family: Subcomplex, method: str) -> None:
        """Verify that a family of nondegenerate simplices is closed under faces.

        Arguments:
        family (Subcomplex):    The ids of the family, one set per grade.
        method (str):           The calling method, used in the error message.

        Raises:
        SubcomplexError:    If some face of a member falls outside the family.
        """
        for k in range(1, len(family)):
            for simplex in family[k]:
                for i, (target, word) in enumerate(self._faces[k][simplex]):
                    grade = k - 1 - len(word)
                    if grade >= len(family) or target not in family[grade]:
                        raise SubcomplexError(method, k, simplex, i)

    def restrict(self, family: Subcomplex, name: str = "") -> Tuple["SimplicialSet", "SSetMap"]:
        """Build the sub-simplicial set on a face-closed family of nondegenerate simplices.

        Arguments:
        family (Subcomplex):    The ids of the family, one set per grade.
        name (str):             A label for the new simplicial set.

        Returns:
        SimplicialSet:  The sub-simplicial set, with ids renumbered in increasing order of the original ids.
        SSetMap:        The inclusion into this simplicial set.
        """
        self.check_subcomplex(family, "restrict")
        members = [sorted(grade) for grade in family]
        renumber = [{old: new for new, old in enumerate(grade)} for grade in members]
        keys = [[self._keys[k][old] for old in grade] for k, grade in enumerate(members)]
        faces = [
            [
                tuple((renumber[k - 1 - len(word)][target], word) for target, word in self._faces[k][old])
                for old in grade
            ]
            for k, grade in enumerate(members)
        ]
        sub = SimplicialSet(keys, faces, name)
        inclusion = SSetMap(sub, self, [[(old, ()) for old in grade] for grade in members[: sub.dimension + 1]], name)
        return sub, inclusion

    def __repr__(self) -> str:
        """Return a short description of the simplicial set."""
        return f"SimplicialSet('{self._name}', grades={self.grades})"

    def fingerprint(self) -> str:
        """Return a SHA256 hex digest of the keys and face tables, identifying the simplicial set by content."""
        hashed = SHA256.new()
        for k, grade in enumerate(self._keys):
            hashed.update(f"{k}:{grade!r}:{self._faces[k]!r};".encode("UTF-8"))
        return hashed.hexdigest()


class SSetMap:
    """Represents a simplicial map through the images of the nondegenerate simplices of its source."""

    def __init__(self, source: SimplicialSet, target: SimplicialSet, images: Sequence[Sequence[Face]], name: str = ""):
        """Create a new simplicial map.

        Arguments:
        source (SimplicialSet):             The source of the map.
        target (SimplicialSet):             The target of the map.
        images (Sequence[Sequence[Face]]):  For each grade k and each nondegenerate k-simplex of the source, its image
                                            as a target simplex id and a degeneracy word (the nondegenerate part has
                                            dimension k - len(word)).
        name (str):                         A label for the map, used in logs.
        """
        self._source = source
        self._target = target
        self._images = tuple(tuple(grade) for grade in images)
        self._name = name

    @property
    def source(self) -> SimplicialSet:
        """Return the source of the map."""
        return self._source

    @property
    def target(self) -> SimplicialSet:
        """Return the target of the map."""
        return self._target

    @property
    def name(self) -> str:
        """Return the label of the map."""
        return self._name

    def image(self, k: int, simplex: int) -> Face:
        """Return the image of a nondegenerate k-simplex of the source."""
        return self._images[k][simplex]

    def apply(self, k: int, simplex: int, word: Word = ()) -> Face:
        """Return the image of the possibly degenerate simplex s_word(simplex), using f(s_w x) = s_w f(x).

        Arguments:
        k (int):        The dimension of the nondegenerate source simplex.
        simplex (int):  The id of the nondegenerate source simplex.
        word (Word):    The degeneracy word applied to it.
        """
        target, inner = self._images[k][simplex]
        return target, normalize_word(word + inner)

    def followed_by(self, after: "SSetMap") -> "SSetMap":
        """Return the composite after ∘ self.

        Arguments:
        after (SSetMap):    A map whose source is the target of this map.
        """
        images = [
            [after.apply(k - len(word), target, word) for target, word in grade] for k, grade in enumerate(self._images)
        ]
        return SSetMap(self._source, after.target, images, f"{after.name}∘{self._name}")

    def verify(self) -> None:
        """Check that the map commutes with every face operator.

        Raises:
        InternalAssertionError: If f(d_i x) differs from d_i f(x) for some nondegenerate x.
        """
        for k in range(1, self._source.dimension + 1):
            for simplex in range(self._source.count(k)):
                image, word = self._images[k][simplex]
                for i, (face, face_word) in enumerate(self._source.faces(k, simplex)):
                    mapped = self.apply(k - 1 - len(face_word), face, face_word)
                    expected = self._target.face_of(k - len(word), image, word, i)
                    if mapped != expected:
                        raise InternalAssertionError(
                            "verify",
                            f"map '{self._name}' does not commute with d_{i} on simplex {simplex} in grade {k}",
                        )


def identity_map(sset: SimplicialSet) -> SSetMap:
    """Return the identity map of a simplicial set."""
    return SSetMap(sset, sset, [[(i, ()) for i in range(sset.count(k))] for k in range(sset.dimension + 1)], "id")


def to_simplicial_set(c: Complex) -> SimplicialSet:
    """Convert an ordered simplicial complex into a simplicial set.

    The nondegenerate k-simplices are the k-simplices of the complex, keyed by their vertex tuples, and d_i deletes the
    i-th vertex. All faces are nondegenerate.

    Arguments:
    c (Complex):    The complex to convert.

    Returns:    The simplicial set of the complex.
    """
    simplices = c.simplices()
    index = {simplex: i for grade in simplices.values() for i, simplex in enumerate(grade)}
    keys = [simplices[k] for k in range(c.dimension + 1)]
    faces = [
        [tuple((index[simplex[:i] + simplex[i + 1 :]], ()) for i in range(k + 1)) if k else () for simplex in grade]
        for k, grade in enumerate(keys)
    ]
    sset = SimplicialSet(keys, faces, c.name or "X")
    logger.debug(f"to_simplicial_set: built '{sset.name}' with grades {sset.grades}.")
    return sset


def euler_characteristic(s: SimplicialSet) -> int:
    """Return the alternating sum of the nondegenerate simplex counts."""
    return sum((-1) ** k * count for k, count in enumerate(s.grades))
