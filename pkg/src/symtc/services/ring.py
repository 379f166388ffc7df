"""Contains the service describing the cohomology rings of the symmetric-square family."""

from logging import getLogger

from symtc.algebra.cohomology import CohomologyRing
from symtc.algebra.cohomology import InducedMap
from symtc.algebra.cohomology import exactness_holds
from symtc.algebra.cup_length import GradedSubspace
from symtc.algebra.cup_length import cup_length
from symtc.services.base import EngineProto
from symtc.services.base import pipeline_step
from symtc.topology.simplicial import SimplicialSet
from symtc.types.enums import SpaceTag
from symtc.types.report import MapSummary
from symtc.types.report import ProductTable
from symtc.types.report import RingReport
from symtc.types.report import RingSummary

# Set the default logger for the symtc engine
logger = getLogger(__name__)


def summarize_ring(tag: SpaceTag, ring: CohomologyRing) -> RingSummary:
    """Describe a ring by its Betti numbers, its multiplication tensors and the cup-length of its positive part.

    Arguments:
    tag (SpaceTag):         The tag of the ring within its family.
    ring (CohomologyRing):  The ring.

    Returns:    The ring summary.
    """
    products = [
        ProductTable(left=p, right=q, tensor=tensor.tolist()) for (p, q), tensor in sorted(ring.tensors().items())
    ]
    return RingSummary(
        tag=str(tag),
        name=ring.name,
        relative=ring.relative,
        betti=list(ring.betti),
        products=products,
        cup_length=cup_length(GradedSubspace.positive_part(ring)),
    )


def summarize_map(f: InducedMap, domain: SpaceTag, codomain: SpaceTag) -> MapSummary:
    """Describe an induced map by its matrices and their kernel and image dimensions.

    Arguments:
    f (InducedMap):         The map.
    domain (SpaceTag):      The tag of the ring the map starts from.
    codomain (SpaceTag):    The tag of the ring the map lands in.

    Returns:    The map summary.
    """
    grades = range(f.grades)
    return MapSummary(
        name=f.name,
        domain=str(domain),
        codomain=str(codomain),
        matrices=[f.matrix(k).tolist() for k in grades],
        kernel=[f.kernel(k).dim for k in grades],
        image=[f.image(k).dim for k in grades],
    )


class RingMixin:  # pylint: disable=too-few-public-methods
    """Ring service for the topology engine."""

    @pipeline_step(name="ring")
    def ring_report(self: EngineProto, x: SimplicialSet) -> RingReport:
        """Describe H*(X), H*(SP²X), H*(dX) and H*(SP²X, dX) with the restriction and relative-to-absolute maps.

        Arguments:
        x (SimplicialSet):  The simplicial set X.

        Returns:    The ring report.
        """
        family = self.family(x)
        rings = [
            summarize_ring(SpaceTag.X, family.ring_x),
            summarize_ring(SpaceTag.SYMMETRIC_SQUARE, family.ring_quotient),
            summarize_ring(SpaceTag.IMAGE_DIAGONAL, family.ring_image_diagonal),
            summarize_ring(SpaceTag.PAIR, family.ring_pair),
        ]
        maps = [
            summarize_map(family.restriction, SpaceTag.SYMMETRIC_SQUARE, SpaceTag.IMAGE_DIAGONAL),
            summarize_map(family.relative_to_absolute, SpaceTag.PAIR, SpaceTag.SYMMETRIC_SQUARE),
        ]
        exact = exactness_holds(family.relative_to_absolute, family.restriction)
        return RingReport(space=x.name, rings=rings, maps=maps, exact=exact)
