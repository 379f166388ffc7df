"""Contains the service computing the mod-2 homology of the symmetric-square family."""

from logging import getLogger

from symtc.services.base import EngineProto
from symtc.services.base import pipeline_step
from symtc.topology.simplicial import SimplicialSet
from symtc.types.report import HomologyReport
from symtc.types.report import SpaceHomology

# Set the default logger for the symtc engine
logger = getLogger(__name__)


class HomologyMixin:  # pylint: disable=too-few-public-methods
    """Homology service for the topology engine."""

    @pipeline_step(name="homology")
    def homology(self: EngineProto, x: SimplicialSet) -> HomologyReport:
        """Compute the mod-2 Betti numbers of X, X×X, SP²X, dX and the pair (SP²X, dX).

        Mod-2 cohomology and homology have the same Betti numbers, so the cohomology rings of the family are used.

        Arguments:
        x (SimplicialSet):  The simplicial set X.

        Returns:    The homology report.
        """
        family = self.family(x)
        spaces = []
        for tag, ring in family.rings():
            betti = list(ring.betti)
            spaces.append(
                SpaceHomology(
                    tag=str(tag),
                    name=ring.name,
                    grades=list(ring.complex.generator_counts),
                    betti=betti,
                    euler_characteristic=sum((-1) ** k * b for k, b in enumerate(betti)),
                )
            )
        return HomologyReport(space=x.name, spaces=spaces)
