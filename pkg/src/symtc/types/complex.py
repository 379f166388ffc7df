"""Contains the model for finite ordered simplicial complexes."""

from itertools import combinations
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import field_validator
from pydantic import model_validator

from symtc.types.fields import label
from symtc.types.fields import natural


class Complex(BaseModel):
    """Represents a finite simplicial complex given by its maximal simplices.

    The vertices are the integers 0, ..., vertex_count - 1 and their integer order is the global total order used by
    every ordered construction downstream (products, Alexander-Whitney faces). The list of maximal simplices is kept in
    a canonical form: non-maximal simplices are dropped, isolated vertices appear as singletons and the list is sorted.
    Two complexes with the same simplices therefore compare equal.
    """

    model_config = ConfigDict(frozen=True)

    # The number of vertices of the complex
    vertex_count: int = natural("The number of vertices of the complex")

    # The maximal simplices, each a strictly increasing tuple of vertex indices
    maximal_simplices: List[Tuple[int, ...]]

    # An optional label for the complex, used in reports
    name: Optional[str] = label("A label for the complex", True)

    @field_validator("maximal_simplices")
    @classmethod
    def _check_simplices(cls, value: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
        """Verify that every simplex is nonempty and strictly increasing.

        Arguments:
        value (List[Tuple[int, ...]]):  The maximal simplices to check.

        Returns:    The simplices, unchanged.
        """
        if not value:
            raise ValueError("empty complex")
        for simplex in value:
            if not simplex:
                raise ValueError("empty simplex")
            if len(set(simplex)) != len(simplex):
                raise ValueError(f"duplicate vertex in simplex {list(simplex)}")
            if any(a >= b for a, b in zip(simplex, simplex[1:])):
                raise ValueError(f"simplex {list(simplex)} is not strictly increasing")
        return value

    @model_validator(mode="after")
    def _canonicalize(self) -> "Complex":
        """Verify vertex ranges and put the maximal simplices into canonical form."""
        # First, make sure every vertex is in range
        for simplex in self.maximal_simplices:
            if simplex[0] < 0 or simplex[-1] >= self.vertex_count:
                raise ValueError(f"index out of range in simplex {list(simplex)} (vertex count {self.vertex_count})")

        # Next, drop duplicates and simplices contained in larger ones
        unique = sorted(set(self.maximal_simplices), key=lambda s: (-len(s), s))
        kept: List[Tuple[int, ...]] = []
        for simplex in unique:
            if not any(set(simplex) <= set(other) for other in kept):
                kept.append(simplex)

        # Finally, add unused vertices as isolated points and sort the result
        used = {v for simplex in kept for v in simplex}
        kept.extend((v,) for v in range(self.vertex_count) if v not in used)
        object.__setattr__(self, "maximal_simplices", sorted(kept))
        return self

    @property
    def dimension(self) -> int:
        """Return the dimension of the complex."""
        return max(len(simplex) for simplex in self.maximal_simplices) - 1

    def simplices(self) -> Dict[int, List[Tuple[int, ...]]]:
        """Enumerate every simplex of the complex by closing the maximal simplices under faces.

        Returns:    A mapping from dimension to the sorted list of simplices of that dimension.
        """
        found: Dict[int, set] = {k: set() for k in range(self.dimension + 1)}
        for simplex in self.maximal_simplices:
            for k in range(len(simplex)):
                found[k].update(combinations(simplex, k + 1))
        return {k: sorted(faces) for k, faces in found.items()}

    def f_vector(self) -> List[int]:
        """Return the number of simplices in each dimension."""
        return [len(faces) for _, faces in sorted(self.simplices().items())]
