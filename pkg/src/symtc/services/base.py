"""Contains the engine layer shared by the homology, ring and bounds services."""

from dataclasses import dataclass
from functools import cached_property
from functools import wraps
from logging import getLogger
from typing import Dict
from typing import Optional
from typing import Protocol
from typing import Tuple

from symtc.algebra.cochains import CochainComplex
from symtc.algebra.cohomology import CohomologyRing
from symtc.algebra.cohomology import InducedMap
from symtc.algebra.cohomology import cohomology
from symtc.algebra.cohomology import induced
from symtc.topology.simplicial import SimplicialSet
from symtc.topology.simplicial import Subcomplex
from symtc.topology.simplicial import identity_map
from symtc.topology.sym_square import EquivariantPair
from symtc.topology.sym_square import symmetric_square
from symtc.types.enums import SpaceTag
from symtc.utils.cache import MatrixCache
from symtc.utils.errors import DisconnectedInputError

# Set the default logger for the symtc engine
logger = getLogger(__name__)


@dataclass
class PipelineConfiguration:
    """Configuration for one step of the engine pipeline."""

    # The name of the step, used in logs and error messages
    name: str

    # Whether the step is only defined for connected inputs
    requires_connected: bool = False


class SymmetricSquareFamily:  # pylint: disable=too-many-public-methods
    """Holds X together with X×X, SP²X, dX and their cohomology, each built on first use and kept afterwards."""

    def __init__(self, x: SimplicialSet, cache: Optional[MatrixCache] = None):
        """Create a new family for a simplicial set.

        Arguments:
        x (SimplicialSet):      The simplicial set X.
        cache (MatrixCache):    A cache for cohomology basis data.
        """
        self._x = x
        self._cache = cache

    @property
    def x(self) -> SimplicialSet:
        """Return the simplicial set X."""
        return self._x

    @cached_property
    def pair(self) -> EquivariantPair:
        """Return X×X, SP²X and dX with the maps between them."""
        return symmetric_square(self._x)

    @property
    def product(self) -> SimplicialSet:
        """Return X×X."""
        return self.pair.total

    @property
    def quotient(self) -> SimplicialSet:
        """Return SP²X."""
        return self.pair.quotient  # type: ignore[return-value]

    @property
    def image_diagonal(self) -> SimplicialSet:
        """Return dX."""
        return self.pair.image_diagonal  # type: ignore[return-value]

    @cached_property
    def image_diagonal_family(self) -> Subcomplex:
        """Return the ids of the simplices of dX inside SP²X, one set per grade."""
        inclusion = self.pair.image_diagonal_inclusion
        return tuple(
            frozenset(inclusion.image(k, s)[0] for s in range(self.image_diagonal.count(k)))  # type: ignore[union-attr]
            for k in range(self.image_diagonal.dimension + 1)
        )

    def _ring(self, complex_: CochainComplex, tag: SpaceTag) -> CohomologyRing:
        """Compute the cohomology of a complex of the family through the cache."""
        return cohomology(complex_, self._cache, str(tag))

    @cached_property
    def ring_x(self) -> CohomologyRing:
        """Return H*(X)."""
        return self._ring(CochainComplex(self._x), SpaceTag.X)

    @cached_property
    def ring_product(self) -> CohomologyRing:
        """Return H*(X×X)."""
        return self._ring(CochainComplex(self.product), SpaceTag.PRODUCT)

    @cached_property
    def ring_quotient(self) -> CohomologyRing:
        """Return H*(SP²X)."""
        return self._ring(CochainComplex(self.quotient), SpaceTag.SYMMETRIC_SQUARE)

    @cached_property
    def ring_image_diagonal(self) -> CohomologyRing:
        """Return H*(dX)."""
        return self._ring(CochainComplex(self.image_diagonal), SpaceTag.IMAGE_DIAGONAL)

    @cached_property
    def ring_pair(self) -> CohomologyRing:
        """Return H*(SP²X, dX)."""
        name = f"({self.quotient.name}, {self.image_diagonal.name})"
        return self._ring(CochainComplex(self.quotient, self.image_diagonal_family, name), SpaceTag.PAIR)

    @cached_property
    def diagonal_restriction(self) -> InducedMap:
        """Return the map H*(X×X) → H*(X) induced by the diagonal."""
        return induced(self.pair.diagonal, self.ring_product, self.ring_x, "diagonal")  # type: ignore[arg-type]

    @cached_property
    def restriction(self) -> InducedMap:
        """Return the restriction H*(SP²X) → H*(dX)."""
        inclusion = self.pair.image_diagonal_inclusion
        return induced(inclusion, self.ring_quotient, self.ring_image_diagonal, "restriction")  # type: ignore[arg-type]

    @cached_property
    def relative_to_absolute(self) -> InducedMap:
        """Return the map H*(SP²X, dX) → H*(SP²X)."""
        return induced(identity_map(self.quotient), self.ring_pair, self.ring_quotient, "relative_to_absolute")

    def rings(self) -> Tuple[Tuple[SpaceTag, CohomologyRing], ...]:
        """Return every ring of the family, tagged, in family order."""
        return (
            (SpaceTag.X, self.ring_x),
            (SpaceTag.PRODUCT, self.ring_product),
            (SpaceTag.SYMMETRIC_SQUARE, self.ring_quotient),
            (SpaceTag.IMAGE_DIAGONAL, self.ring_image_diagonal),
            (SpaceTag.PAIR, self.ring_pair),
        )


class EngineProto(Protocol):
    """Protocol for the topology engine, allowing for proper typing of the mixins."""

    @property
    def cache(self) -> Optional[MatrixCache]:
        """Return the cache used for cohomology basis data, if any."""

    def family(self, x: SimplicialSet) -> SymmetricSquareFamily:
        """Return the symmetric-square family of a simplicial set, building it on first use.

        Arguments:
        x (SimplicialSet):  The simplicial set X.

        Returns:    The family, shared by every call with a simplicial set of the same content.
        """

    def verify_connected(self, x: SimplicialSet, config: PipelineConfiguration) -> None:
        """Verify that a simplicial set is connected.

        Arguments:
        x (SimplicialSet):              The simplicial set to check.
        config (PipelineConfiguration): The configuration of the calling step.

        Raises:
        DisconnectedInputError: If the simplicial set is not connected.
        """


def pipeline_step(**kwargs):
    """Create a decorator for a step of the engine pipeline.

    The decorated method receives the simplicial set X as its first argument. The decorator logs the call and its
    result and, for steps that need it, verifies that X is connected before the step runs.

    Arguments:
    name (str):                 The name of the step.
    requires_connected (bool):  If True, the step raises DisconnectedInputError for disconnected inputs.
    """
    # First, create the step configuration from the given parameters
    config = PipelineConfiguration(**kwargs)

    # Next, create a decorator that verifies the input and logs around the step
    def decorator(func):
        @wraps(func)
        def wrapper(self: EngineProto, x: SimplicialSet, *args, **kwargs):
            logger.info(f"{config.name}: Called with {x!r}, args: {args}, kwargs: {kwargs}...")

            # First, verify that the input is connected if the step requires it
            if config.requires_connected:
                self.verify_connected(x, config)

            # Finally, run the step and return its result
            result = func(self, x, *args, **kwargs)
            logger.info(f"{config.name}: Returning {result!r}.")
            return result

        return wrapper

    return decorator


class BaseEngine:
    """Base engine holding the cache and the symmetric-square families built so far."""

    def __init__(self, cache: Optional[MatrixCache] = None):
        """Create a new engine.

        Arguments:
        cache (MatrixCache):    A cache for cohomology basis data. Nothing is cached if omitted.
        """
        self._cache = cache
        self._families: Dict[str, SymmetricSquareFamily] = {}

    @property
    def cache(self) -> Optional[MatrixCache]:
        """Return the cache used for cohomology basis data, if any."""
        return self._cache

    def family(self, x: SimplicialSet) -> SymmetricSquareFamily:
        """Return the symmetric-square family of a simplicial set, building it on first use.

        Arguments:
        x (SimplicialSet):  The simplicial set X.

        Returns:    The family, shared by every call with a simplicial set of the same content.
        """
        fingerprint = x.fingerprint()
        if fingerprint not in self._families:
            logger.debug(f"family: new family for '{x.name}' ({fingerprint[:12]}).")
            self._families[fingerprint] = SymmetricSquareFamily(x, self._cache)
        return self._families[fingerprint]

    def verify_connected(self, x: SimplicialSet, config: PipelineConfiguration) -> None:
        """Verify that a simplicial set is connected, counting components by the mod-2 Betti number in grade 0.

        Arguments:
        x (SimplicialSet):              The simplicial set to check.
        config (PipelineConfiguration): The configuration of the calling step.

        Raises:
        DisconnectedInputError: If the simplicial set is not connected.
        """
        components = self.family(x).ring_x.betti_number(0)
        if components != 1:
            raise DisconnectedInputError(config.name, components)
