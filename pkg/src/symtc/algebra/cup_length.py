"""Contains graded subspaces of cohomology rings and their cup-length."""

from logging import getLogger
from typing import Dict
from typing import Optional

import numpy as np

from symtc.algebra.cohomology import CohomologyRing
from symtc.algebra.cohomology import InducedMap
from symtc.algebra.f2 import F2Matrix
from symtc.algebra.f2 import Subspace
from symtc.utils.errors import MixedRingError
from symtc.utils.errors import ShapeMismatchError

# Set the default logger for the symtc engine
logger = getLogger(__name__)


class GradedSubspace:
    """Represents a family of classes of positive grade in a cohomology ring, stored as one span per grade."""

    def __init__(self, ring: CohomologyRing, spans: Optional[Dict[int, Subspace]] = None):
        """Create a new graded subspace.

        Arguments:
        ring (CohomologyRing):          The ambient ring.
        spans (Dict[int, Subspace]):    For each grade k >= 1, a subspace of coordinate vectors of the ring in grade k.
                                        Zero spans are dropped.
        """
        self._ring = ring
        self._spans: Dict[int, Subspace] = {}
        for k, span in sorted((spans or {}).items()):
            if k < 1:
                raise ShapeMismatchError("GradedSubspace", (1,), (k,))
            if span.ambient != ring.betti_number(k):
                raise ShapeMismatchError("GradedSubspace", (ring.betti_number(k),), (span.ambient,))
            if span.dim:
                self._spans[k] = span

    @classmethod
    def positive_part(cls, ring: CohomologyRing) -> "GradedSubspace":
        """Return the whole positive-grade part of a ring."""
        return cls(ring, {k: Subspace.full(ring.betti_number(k)) for k in range(1, ring.dimension + 1)})

    @classmethod
    def kernel_of(cls, f: InducedMap) -> "GradedSubspace":
        """Return the positive-grade kernel of an induced map, as a subspace of its domain."""
        return cls(f.domain, {k: f.kernel(k) for k in range(1, f.domain.dimension + 1)})

    @property
    def ring(self) -> CohomologyRing:
        """Return the ambient ring."""
        return self._ring

    @property
    def spans(self) -> Dict[int, Subspace]:
        """Return the nonzero spans by grade."""
        return dict(self._spans)

    @property
    def dimensions(self) -> Dict[int, int]:
        """Return the dimension of each nonzero span."""
        return {k: span.dim for k, span in self._spans.items()}

    def is_zero(self) -> bool:
        """Return True if every span is zero."""
        return not self._spans

    def products(self, other: "GradedSubspace") -> "GradedSubspace":
        """Return the span of all products b · w with b in this subspace and w in another.

        Arguments:
        other (GradedSubspace): A subspace of the same ring.
        """
        if other.ring is not self._ring:
            raise MixedRingError("products", self._ring.name, other.ring.name)
        collected: Dict[int, list] = {}
        for p, left in self._spans.items():
            for q, right in other.spans.items():
                n = p + q
                if n > self._ring.dimension or not self._ring.betti_number(n):
                    continue
                result = self._ring.multiply(p, q, left.basis.to_array(), right.basis.to_array())
                collected.setdefault(n, []).append(result.reshape(-1, self._ring.betti_number(n)))
        spans = {n: Subspace.from_vectors(F2Matrix.from_array(np.vstack(rows))) for n, rows in collected.items()}
        return GradedSubspace(self._ring, spans)


def cup_length(v: GradedSubspace) -> int:
    """Return the largest k such that some product of k elements of v is nonzero.

    The k-fold products span W_k, where W_1 = v and W_{j+1} is spanned by the products b · w with b in v and w in W_j.
    The answer is the largest j with W_j nonzero, or 0 if v is zero. Every factor has grade at least 1, so the
    iteration stops once the grades pass the top grade of the ring.

    Arguments:
    v (GradedSubspace): The subspace.

    Returns:    The cup-length of v.
    """
    length = 0
    current = v
    while not current.is_zero():
        length += 1
        logger.debug(f"cup_length: W_{length} of '{v.ring.name}' has dimensions {current.dimensions}.")
        current = v.products(current)
    return length
