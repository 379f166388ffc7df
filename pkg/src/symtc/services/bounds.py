"""Contains the service turning cohomology rings into bounds for symmetrized topological complexity."""

from logging import getLogger
from typing import Optional
from typing import Tuple

from symtc.algebra.cup_length import GradedSubspace
from symtc.algebra.cup_length import cup_length
from symtc.services.base import EngineProto
from symtc.services.base import pipeline_step
from symtc.topology.simplicial import SimplicialSet
from symtc.types.enums import ConnectivityVerdict
from symtc.types.report import ACYCLIC_CAVEAT
from symtc.types.report import CONNECTIVITY_CAVEAT
from symtc.types.report import TC_S_CAVEAT
from symtc.types.report import Bounds
from symtc.types.report import BoundsReport
from symtc.types.report import Connectivity
from symtc.utils.errors import ConnectivityRefutedError
from symtc.utils.errors import InconsistentBoundsError
from symtc.utils.errors import InternalAssertionError

# Set the default logger for the symtc engine
logger = getLogger(__name__)


def upper_bound_sigma(dim: int, s: int) -> int:
    """Return the largest integer strictly less than (2·dim + 1) / (s + 1).

    For an s-connected polyhedron of dimension dim this bounds TC^Σ from above.

    Arguments:
    dim (int):  The dimension of the space.
    s (int):    The connectivity of the space.

    Returns:    The upper bound, which equals ⌊2·dim / (s + 1)⌋.
    """
    if dim < 0 or s < 0:
        raise ValueError(f"upper_bound_sigma: dim and s must be natural numbers, received dim={dim}, s={s}.")
    return (2 * dim) // (s + 1)


def first_refuting_grade(betti: Tuple[int, ...], s: int) -> Optional[Tuple[int, int]]:
    """Find the first grade k <= s whose reduced mod-2 Betti number is nonzero.

    Arguments:
    betti (Tuple[int, ...]):    The mod-2 Betti numbers of the space.
    s (int):                    The declared connectivity.

    Returns:    The grade and its reduced Betti number, or None if every reduced Betti number through grade s vanishes.
    """
    for k, value in enumerate(betti[: s + 1]):
        reduced = value - 1 if k == 0 else value
        if reduced:
            return k, reduced
    return None


class BoundsMixin:
    """Bounds service for the topology engine."""

    @pipeline_step(name="lower_bound_tc", requires_connected=True)
    def lower_bound_tc(self: EngineProto, x: SimplicialSet) -> int:
        """Return the zero-divisor cup-length: the cup-length of the kernel of H*(X×X) → H*(X) induced by the diagonal.

        Arguments:
        x (SimplicialSet):  The simplicial set X.

        Returns:    A lower bound for TC(X), hence for TC^Σ(X).
        """
        return cup_length(GradedSubspace.kernel_of(self.family(x).diagonal_restriction))

    @pipeline_step(name="lower_bound_sigma_kernel", requires_connected=True)
    def lower_bound_sigma_kernel(self: EngineProto, x: SimplicialSet) -> int:
        """Return the cup-length of the kernel of the restriction H*(SP²X) → H*(dX).

        Arguments:
        x (SimplicialSet):  The simplicial set X.

        Returns:    A lower bound for TC^Σ(X).
        """
        return cup_length(GradedSubspace.kernel_of(self.family(x).restriction))

    @pipeline_step(name="lower_bound_sigma_relative", requires_connected=True)
    def lower_bound_sigma_relative(self: EngineProto, x: SimplicialSet) -> int:
        """Return the cup-length of the positive-grade part of H*(SP²X, dX).

        Arguments:
        x (SimplicialSet):  The simplicial set X.

        Returns:    A lower bound for the monoidal TC^Σ(X), which agrees with TC^Σ(X) on finite complexes.
        """
        return cup_length(GradedSubspace.positive_part(self.family(x).ring_pair))

    @pipeline_step(name="connectivity_check")
    def connectivity_check(self: EngineProto, x: SimplicialSet, s: int) -> ConnectivityVerdict:
        """Check a declared connectivity against the reduced mod-2 Betti numbers of X.

        A consistent verdict does not prove s-connectivity; a refuted one proves its failure.

        Arguments:
        x (SimplicialSet):  The simplicial set X.
        s (int):            The declared connectivity.

        Returns:    REFUTED if some reduced Betti number in grade <= s is nonzero, CONSISTENT otherwise.
        """
        if first_refuting_grade(self.family(x).ring_x.betti, s) is None:
            return ConnectivityVerdict.CONSISTENT
        return ConnectivityVerdict.REFUTED

    @pipeline_step(name="bounds_report", requires_connected=True)
    def bounds_report(self, x: SimplicialSet, s: int = 0, declared: bool = True) -> BoundsReport:
        """Compute every bound for TC^Σ(X) and combine them into a report.

        Arguments:
        x (SimplicialSet):  The simplicial set X.
        s (int):            The connectivity of X.
        declared (bool):    Whether s was declared by the user rather than defaulted.

        Returns:    The bounds report.

        Raises:
        ConnectivityRefutedError:   If mod-2 homology refutes the connectivity.
        InconsistentBoundsError:    If a lower bound exceeds the upper bound.
        InternalAssertionError:     If the kernel bound exceeds the relative bound.
        """
        family = self.family(x)  # type: ignore[attr-defined]

        # First, guard the connectivity that the upper bound consumes
        refuting = first_refuting_grade(family.ring_x.betti, s)
        if refuting is not None:
            raise ConnectivityRefutedError("bounds_report", s, *refuting)

        # Next, compute the bounds
        bounds = Bounds(
            tc_lower=self.lower_bound_tc(x),  # type: ignore[attr-defined]
            sigma_kernel_lower=self.lower_bound_sigma_kernel(x),  # type: ignore[attr-defined]
            sigma_relative_lower=self.lower_bound_sigma_relative(x),  # type: ignore[attr-defined]
            sigma_upper=upper_bound_sigma(x.dimension, s),
        )
        if bounds.sigma_kernel_lower > bounds.sigma_relative_lower:
            raise InternalAssertionError(
                "bounds_report",
                f"kernel bound {bounds.sigma_kernel_lower} exceeds relative bound {bounds.sigma_relative_lower}.",
            )
        if bounds.lower > bounds.sigma_upper:
            raise InconsistentBoundsError("bounds_report", bounds.lower, bounds.sigma_upper, s)

        # Now, record where each number comes from and what the report cannot say
        provenance = [
            f"tc_lower = {bounds.tc_lower}: zero-divisor cup-length of ker(H*(XxX) -> H*(X)); TC <= TC^Σ",
            f"sigma_kernel_lower = {bounds.sigma_kernel_lower}: cup-length of the classes of H*(SP2X) restricting to "
            "zero on dX",
            f"sigma_relative_lower = {bounds.sigma_relative_lower}: cup-length of the relative ring H*(SP2X, dX), a "
            "bound for monoidal TC^Σ, which equals TC^Σ on paracompact ENRs such as finite complexes",
            f"sigma_upper = {bounds.sigma_upper}: TC^Σ < (2 dim X + 1)/(s + 1) for an s-connected polyhedron, "
            f"with dim X = {x.dimension} and s = {s}",
        ]
        caveats = [CONNECTIVITY_CAVEAT, TC_S_CAVEAT]
        if s >= 1:
            caveats.append(f"s = {s} asserts that X is simply connected, which is taken on trust")
        if not any(family.ring_x.betti[1:]):
            caveats.append(ACYCLIC_CAVEAT)

        # Finally, assemble the report
        betti = {str(tag): list(ring.betti) for tag, ring in family.rings()}
        return BoundsReport(
            space=x.name,
            betti=betti,
            bounds=bounds,
            interval=(bounds.lower, bounds.sigma_upper),
            provenance=provenance,
            caveats=caveats,
            connectivity=Connectivity(s=s, declared=declared, verdict=ConnectivityVerdict.CONSISTENT),
        )
