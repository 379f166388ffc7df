"""Contains exact linear algebra over the two-element field on bit-packed numpy matrices."""

from logging import getLogger
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np

from symtc.utils.errors import ContainmentError
from symtc.utils.errors import ShapeMismatchError

# Set the default logger for the symtc engine
logger = getLogger(__name__)


def _pack(bits: np.ndarray) -> np.ndarray:
    """Pack a 2-D array of 0/1 entries into rows of bytes, most significant bit first."""
    return np.packbits(np.asarray(bits, dtype=np.uint8) & 1, axis=1)


def _product(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Multiply two unpacked 0/1 arrays over F2.

    The product goes through float32 BLAS; every entry is a count below 2^24 before reduction, so it is exact.
    """
    return (left.astype(np.float32) @ right.astype(np.float32) % 2).astype(np.uint8)


class F2Matrix:
    """Represents an immutable matrix over F2 with bit-packed rows."""

    def __init__(self, rows: int, cols: int, data: Optional[np.ndarray] = None):
        """Create a new matrix from packed row data.

        Arguments:
        rows (int):         The number of rows.
        cols (int):         The number of columns.
        data (np.ndarray):  The packed rows, of shape (rows, ceil(cols / 8)) and dtype uint8. Zero if omitted.
        """
        width = (cols + 7) // 8
        if data is None:
            data = np.zeros((rows, width), dtype=np.uint8)
        if data.shape != (rows, width):
            raise ShapeMismatchError("F2Matrix", (rows, width), tuple(data.shape))
        self._rows = rows
        self._cols = cols
        self._data = data
        self._data.setflags(write=False)

    @classmethod
    def from_array(cls, bits: Sequence) -> "F2Matrix":
        """Create a matrix from a 2-D array-like of integers, reduced mod 2."""
        array = np.asarray(bits, dtype=np.int64)
        if array.ndim != 2:
            raise ShapeMismatchError("from_array", (0, 0), tuple(array.shape))
        return cls(array.shape[0], array.shape[1], _pack(array & 1))

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        """Create the n×n identity matrix."""
        return cls.from_array(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Matrix":
        """Create the rows×cols zero matrix."""
        return cls(rows, cols)

    @property
    def rows(self) -> int:
        """Return the number of rows."""
        return self._rows

    @property
    def cols(self) -> int:
        """Return the number of columns."""
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        """Return the shape of the matrix."""
        return self._rows, self._cols

    @property
    def packed(self) -> np.ndarray:
        """Return the read-only packed row data."""
        return self._data

    def to_array(self) -> np.ndarray:
        """Return the matrix as an unpacked uint8 array of 0/1 entries."""
        return np.unpackbits(self._data, axis=1, count=self._cols).reshape(self._rows, self._cols)

    def transpose(self) -> "F2Matrix":
        """Return the transposed matrix."""
        return F2Matrix.from_array(self.to_array().T)

    def is_zero(self) -> bool:
        """Return True if every entry is zero."""
        return not self._data.any()

    def stack(self, other: "F2Matrix") -> "F2Matrix":
        """Return this matrix with the rows of another appended below."""
        if other.cols != self._cols:
            raise ShapeMismatchError("stack", (other.rows, self._cols), other.shape)
        return F2Matrix(self._rows + other.rows, self._cols, np.vstack([self._data, other.packed]))

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        """Return the matrix product over F2."""
        if self._cols != other.rows:
            raise ShapeMismatchError("matmul", (self._cols, other.cols), other.shape)
        return F2Matrix.from_array(_product(self.to_array(), other.to_array()))

    def __eq__(self, other: object) -> bool:
        """Return True if both matrices have the same shape and entries."""
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other.packed))

    def __hash__(self) -> int:
        """Return a hash of the shape and packed data."""
        return hash((self._rows, self._cols, self._data.tobytes()))

    def __repr__(self) -> str:
        """Return a short description of the matrix."""
        return f"F2Matrix({self._rows}x{self._cols})"

    def dump(self) -> str:
        """Return the matrix in the debug format: one row per line of 0/1 characters."""
        return "\n".join("".join(str(int(bit)) for bit in row) for row in self.to_array())


def row_reduce(m: F2Matrix) -> Tuple[F2Matrix, Tuple[int, ...]]:
    """Bring a matrix into reduced row echelon form.

    Pivots are chosen deterministically: the leftmost column with a nonzero entry at or below the current row, and the
    topmost such row.

    Arguments:
    m (F2Matrix):   The matrix to reduce.

    Returns:
    F2Matrix:           The nonzero rows of the reduced row echelon form.
    Tuple[int, ...]:    The pivot column of each returned row.
    """
    mat = np.array(m.packed, copy=True)
    pivots = []
    row = 0
    for col in range(m.cols):
        if row == m.rows:
            break
        column = mat[:, col >> 3] & np.uint8(0x80 >> (col & 7))
        hits = np.flatnonzero(column[row:])
        if hits.size == 0:
            continue
        pivot = row + int(hits[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
            column[[row, pivot]] = column[[pivot, row]]
        others = np.flatnonzero(column)
        others = others[others != row]
        if others.size:
            mat[others] ^= mat[row]
        pivots.append(col)
        row += 1
    return F2Matrix(row, m.cols, mat[:row]), tuple(pivots)


class Subspace:
    """Represents a subspace of F2^n by its reduced row echelon basis."""

    def __init__(self, ambient: int, basis: F2Matrix, pivots: Tuple[int, ...]):
        """Create a new subspace. Use from_vectors unless the basis is already reduced.

        Arguments:
        ambient (int):              The dimension n of the ambient space.
        basis (F2Matrix):           The basis rows, in reduced row echelon form.
        pivots (Tuple[int, ...]):   The pivot column of each basis row.
        """
        if basis.cols != ambient or basis.rows != len(pivots):
            raise ShapeMismatchError("Subspace", (len(pivots), ambient), basis.shape)
        self._ambient = ambient
        self._basis = basis
        self._pivots = pivots

    @classmethod
    def from_vectors(cls, vectors: F2Matrix) -> "Subspace":
        """Create the span of the rows of a matrix."""
        basis, pivots = row_reduce(vectors)
        return cls(vectors.cols, basis, pivots)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        """Create the zero subspace of F2^ambient."""
        return cls(ambient, F2Matrix.zeros(0, ambient), ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        """Create the whole space F2^ambient."""
        return cls(ambient, F2Matrix.identity(ambient), tuple(range(ambient)))

    @property
    def ambient(self) -> int:
        """Return the dimension of the ambient space."""
        return self._ambient

    @property
    def dim(self) -> int:
        """Return the dimension of the subspace."""
        return self._basis.rows

    @property
    def basis(self) -> F2Matrix:
        """Return the reduced row echelon basis."""
        return self._basis

    @property
    def pivots(self) -> Tuple[int, ...]:
        """Return the pivot columns of the basis."""
        return self._pivots

    def reduce(self, vectors: F2Matrix) -> F2Matrix:
        """Reduce each row of a matrix modulo the subspace, clearing the pivot columns.

        Arguments:
        vectors (F2Matrix): The vectors to reduce, one per row.

        Returns:    The residues, one per row; a residue is zero exactly when the vector lies in the subspace.
        """
        if vectors.cols != self._ambient:
            raise ShapeMismatchError("reduce", (vectors.rows, self._ambient), vectors.shape)
        if not self._pivots:
            return vectors
        array = vectors.to_array()
        residues = array ^ _product(array[:, list(self._pivots)], self._basis.to_array())
        return F2Matrix.from_array(residues)

    def contains(self, vectors: F2Matrix) -> bool:
        """Return True if every row of the matrix lies in the subspace."""
        return self.reduce(vectors).is_zero()

    def is_subspace_of(self, other: "Subspace") -> bool:
        """Return True if this subspace is contained in another."""
        return self._ambient == other.ambient and other.contains(self._basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        """Return the sum of two subspaces of the same ambient space."""
        if other.ambient != self._ambient:
            raise ShapeMismatchError("add", (other.dim, self._ambient), (other.dim, other.ambient))
        return Subspace.from_vectors(self._basis.stack(other.basis))

    def __eq__(self, other: object) -> bool:
        """Return True if both subspaces are equal; reduced echelon bases are unique."""
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._ambient == other.ambient and self._basis == other.basis

    def __hash__(self) -> int:
        """Return a hash of the ambient dimension and basis."""
        return hash((self._ambient, self._basis))

    def __repr__(self) -> str:
        """Return a short description of the subspace."""
        return f"Subspace(dim={self.dim}, ambient={self._ambient})"


def rank(m: F2Matrix) -> int:
    """Return the rank of a matrix over F2."""
    return len(row_reduce(m)[1])


def kernel(m: F2Matrix) -> Subspace:
    """Return the kernel {v : m v = 0} as a subspace of F2^cols."""
    reduced, pivots = row_reduce(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = np.zeros((len(free), m.cols), dtype=np.uint8)
    if free:
        vectors[np.arange(len(free)), free] = 1
        if pivots:
            vectors[:, list(pivots)] = reduced.to_array()[:, free].T
    return Subspace.from_vectors(F2Matrix.from_array(vectors))


def image(m: F2Matrix) -> Subspace:
    """Return the column space of a matrix as a subspace of F2^rows."""
    return Subspace.from_vectors(m.transpose())


def solve(m: F2Matrix, b: Sequence[int]) -> Optional[np.ndarray]:
    """Solve m x = b over F2.

    Arguments:
    m (F2Matrix):       The coefficient matrix.
    b (Sequence[int]):  The right-hand side, of length m.rows.

    Returns:    A solution as an unpacked uint8 vector (free variables set to zero), or None if there is none.
    """
    rhs = np.asarray(b, dtype=np.uint8).reshape(-1) & 1
    if rhs.shape[0] != m.rows:
        raise ShapeMismatchError("solve", (m.rows,), tuple(rhs.shape))
    augmented = F2Matrix.from_array(np.hstack([m.to_array(), rhs.reshape(-1, 1)]))
    reduced, pivots = row_reduce(augmented)
    if pivots and pivots[-1] == m.cols:
        return None
    solution = np.zeros(m.cols, dtype=np.uint8)
    if pivots:
        solution[list(pivots)] = reduced.to_array()[:, m.cols]
    return solution


def quotient_basis(z: Subspace, b: Subspace) -> F2Matrix:
    """Return coset representatives whose cosets form a basis of z / b.

    The representatives are the reduced row echelon basis of the residues of z modulo b. They lie in z, vanish on the
    pivot columns of b and are therefore independent modulo b.

    Arguments:
    z (Subspace):   The larger subspace.
    b (Subspace):   A subspace of z.

    Returns:    The representatives, one per row.
    """
    if z.ambient != b.ambient:
        raise ShapeMismatchError("quotient_basis", (b.dim, z.ambient), (b.dim, b.ambient))
    if not b.is_subspace_of(z):
        raise ContainmentError("quotient_basis", f"{b!r} is not contained in {z!r}.")
    return Subspace.from_vectors(b.reduce(z.basis)).basis


class CosetCoordinates:
    """Expresses vectors of a sum b ⊕ span(reps) in terms of the representatives, discarding the b part."""

    def __init__(self, ambient: int, b_pivots: Sequence[int], rep_pivots: Sequence[int], transfer: np.ndarray):
        """Create a coordinate table from its raw parts. Use build unless restoring from a cache.

        Arguments:
        ambient (int):              The dimension of the ambient space.
        b_pivots (Sequence[int]):   The pivot columns of the reduced basis of b.
        rep_pivots (Sequence[int]): The pivot columns of the reduced representatives.
        transfer (np.ndarray):      The entries of the reduced basis of b in the representative pivot columns.
        """
        self._ambient = ambient
        self._b_pivots = list(b_pivots)
        self._rep_pivots = list(rep_pivots)
        self._transfer = np.asarray(transfer, dtype=np.uint8).reshape(len(self._b_pivots), len(self._rep_pivots))

    @classmethod
    def build(cls, b: Subspace, reps: F2Matrix) -> "CosetCoordinates":
        """Create the coordinate table for representatives produced by quotient_basis.

        Arguments:
        b (Subspace):       The subspace being quotiented out.
        reps (F2Matrix):    The representatives, in reduced row echelon form and vanishing on the pivots of b.
        """
        reduced, rep_pivots = row_reduce(reps)
        if reduced != reps:
            raise ContainmentError("CosetCoordinates", "Representatives must be in reduced row echelon form.")
        transfer = b.basis.to_array()[:, list(rep_pivots)]
        return cls(b.ambient, b.pivots, rep_pivots, transfer)

    @property
    def ambient(self) -> int:
        """Return the dimension of the ambient space."""
        return self._ambient

    @property
    def dim(self) -> int:
        """Return the number of representatives."""
        return len(self._rep_pivots)

    def arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Return the raw parts of the table (b pivots, representative pivots, transfer)."""
        return np.asarray(self._b_pivots, dtype=np.int64), np.asarray(self._rep_pivots, dtype=np.int64), self._transfer

    def coordinates(self, vectors: F2Matrix) -> np.ndarray:
        """Return the coordinates of each row with respect to the representatives.

        Arguments:
        vectors (F2Matrix): Vectors of b ⊕ span(reps), one per row.

        Returns:    An unpacked uint8 array of shape (vectors.rows, dim).
        """
        if vectors.cols != self._ambient:
            raise ShapeMismatchError("coordinates", (vectors.rows, self._ambient), vectors.shape)
        array = vectors.to_array()
        coords = array[:, self._rep_pivots]
        if self._b_pivots and self._rep_pivots:
            coords = coords ^ _product(array[:, self._b_pivots], self._transfer)
        return coords.astype(np.uint8)
