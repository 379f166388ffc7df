"""Contains the report models written by the homology, ring and bounds commands."""

from typing import Dict
from typing import List
from typing import Tuple

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator

from symtc.types.enums import ConnectivityVerdict
from symtc.types.fields import betti_sequence
from symtc.types.fields import label
from symtc.types.fields import natural

# The caveat attached to every bounds report about the declared connectivity
CONNECTIVITY_CAVEAT = "Consistency is NOT a proof of s-connectivity (mod-2 homology cannot see it)"

# The caveat attached to every bounds report about the configuration-space version of the invariant
TC_S_CAVEAT = "no value of the configuration-space symmetric TC (TC^S) is claimed"

# The caveat attached to bounds reports of spaces whose positive-grade mod-2 Betti numbers all vanish
ACYCLIC_CAVEAT = "input is mod-2 acyclic; a contractible space has TC^Σ = 0, which no lower bound here can exceed"


def _format_sequence(values: List[int]) -> str:
    """Format a sequence of integers as (a, b, c)."""
    return "(" + ", ".join(str(v) for v in values) + ")"


class Bounds(BaseModel):
    """Holds the four bounds of a bounds report."""

    model_config = ConfigDict(frozen=True)

    # The zero-divisor cup-length, a lower bound for TC and hence for TC^Σ
    tc_lower: int = natural("The zero-divisor cup-length")

    # The cup-length of the kernel of H*(SP²X) → H*(dX)
    sigma_kernel_lower: int = natural("The cup-length of the kernel of restriction to dX")

    # The cup-length of the positive-grade part of H*(SP²X, dX)
    sigma_relative_lower: int = natural("The cup-length of the relative ring")

    # The dimension-connectivity upper bound
    sigma_upper: int = natural("The dimension-connectivity upper bound")

    @property
    def lower(self) -> int:
        """Return the largest lower bound."""
        return max(self.tc_lower, self.sigma_kernel_lower, self.sigma_relative_lower)


class Connectivity(BaseModel):
    """Holds the connectivity used by a bounds report and the verdict of the homological guard."""

    model_config = ConfigDict(frozen=True)

    # The connectivity s fed into the upper bound
    s: int = natural("The connectivity fed into the upper bound")

    # Whether s was declared by the user (False when the default of 0 was used)
    declared: bool = Field(description="Whether s was declared by the user")

    # The verdict of the homological guard
    verdict: ConnectivityVerdict = Field(description="The verdict of the homological guard")


class BoundsReport(BaseModel):
    """Represents the certified bounds for the symmetrized topological complexity of a space."""

    model_config = ConfigDict(frozen=True)

    # The label of the space
    space: str = label("The label of the space")

    # The mod-2 Betti numbers of X, X×X, SP²X, dX and the pair (SP²X, dX), keyed by space tag
    betti: Dict[str, List[int]] = Field(description="The mod-2 Betti numbers by space tag")

    # The four bounds
    bounds: Bounds = Field(description="The four bounds")

    # The combined interval [largest lower bound, upper bound]
    interval: Tuple[int, int] = Field(description="The combined interval")

    # One line per bound naming the result it rests on
    provenance: List[str] = Field(default_factory=list, description="The result behind each bound")

    # Limitations of the report
    caveats: List[str] = Field(default_factory=list, description="Limitations of the report")

    # The connectivity used for the upper bound
    connectivity: Connectivity = Field(description="The connectivity used for the upper bound")

    @model_validator(mode="after")
    def _check_interval(self) -> "BoundsReport":
        """Verify that the interval is built from the bounds and is not empty."""
        if self.interval != (self.bounds.lower, self.bounds.sigma_upper):
            raise ValueError(f"interval {list(self.interval)} does not match the bounds")
        if self.interval[0] > self.interval[1]:
            raise ValueError(f"interval {list(self.interval)} is empty")
        return self

    def render_text(self) -> str:
        """Render the report as human-readable text."""
        lines = [f"Space: {self.space}", "Mod-2 Betti numbers:"]
        lines.extend(f"  {tag:<8}{_format_sequence(values)}" for tag, values in self.betti.items())
        lines.extend(
            [
                "Bounds:",
                f"  TC lower (zero-divisors):       {self.bounds.tc_lower}",
                f"  TC^Σ lower (kernel on SP²):     {self.bounds.sigma_kernel_lower}",
                f"  TC^Σ lower (relative SP², dX):  {self.bounds.sigma_relative_lower}",
                f"  TC^Σ upper (dim/connectivity):  {self.bounds.sigma_upper}",
                f"TC^Σ ∈ [{self.interval[0]}, {self.interval[1]}]",
                f"Connectivity: s = {self.connectivity.s} "
                f"({'declared' if self.connectivity.declared else 'default'}, {self.connectivity.verdict})",
                "Provenance:",
            ]
        )
        lines.extend(f"  - {entry}" for entry in self.provenance)
        lines.append("Caveats:")
        lines.extend(f"  - {entry}" for entry in self.caveats)
        return "\n".join(lines) + "\n"


class SpaceHomology(BaseModel):
    """Holds the size and mod-2 homology of one space of the symmetric-square family."""

    model_config = ConfigDict(frozen=True)

    # The tag of the space within the family
    tag: str = label("The tag of the space within the family")

    # The label of the space
    name: str = label("The label of the space")

    # The number of nondegenerate simplices (generators, for a pair) in each grade
    grades: List[int] = betti_sequence("The number of generators in each grade")

    # The mod-2 Betti numbers in each grade
    betti: List[int] = betti_sequence("The mod-2 Betti numbers in each grade")

    # The alternating sum of the Betti numbers
    euler_characteristic: int = Field(description="The alternating sum of the Betti numbers")


class HomologyReport(BaseModel):
    """Represents the mod-2 homology of X, X×X, SP²X, dX and the pair (SP²X, dX)."""

    model_config = ConfigDict(frozen=True)

    # The label of the input space
    space: str = label("The label of the input space")

    # The homology of each space, in family order
    spaces: List[SpaceHomology] = Field(default_factory=list, description="The homology of each space")

    def render_text(self) -> str:
        """Render the report as human-readable text."""
        lines = [f"Space: {self.space}"]
        for entry in self.spaces:
            lines.append(
                f"  {entry.tag:<8}{entry.name}: simplices {_format_sequence(entry.grades)}, "
                f"Betti {_format_sequence(entry.betti)}, χ = {entry.euler_characteristic}"
            )
        return "\n".join(lines) + "\n"


class ProductTable(BaseModel):
    """Holds the multiplication tensor of one bidegree of a ring."""

    model_config = ConfigDict(frozen=True)

    # The grades of the two factors
    left: int = natural("The grade of the left factor")
    right: int = natural("The grade of the right factor")

    # Entry [i][j] holds the coordinates of e_i · e_j
    tensor: List[List[List[int]]] = Field(default_factory=list, description="The multiplication tensor")

    @property
    def nonzero(self) -> bool:
        """Return True if some product of basis classes is nonzero."""
        return any(any(any(row) for row in block) for block in self.tensor)


class RingSummary(BaseModel):
    """Holds the basis dimensions, multiplication tensors and cup-length of one ring."""

    model_config = ConfigDict(frozen=True)

    # The tag of the ring within the family
    tag: str = label("The tag of the ring within the family")

    # The label of the ring
    name: str = label("The label of the ring")

    # Whether the ring is the cohomology of a pair
    relative: bool = Field(description="Whether the ring is the cohomology of a pair")

    # The basis dimension in each grade
    betti: List[int] = betti_sequence("The basis dimension in each grade")

    # The multiplication tensors in positive bidegrees
    products: List[ProductTable] = Field(default_factory=list, description="The multiplication tensors")

    # The cup-length of the positive-grade part
    cup_length: int = natural("The cup-length of the positive-grade part")


class MapSummary(BaseModel):
    """Holds the matrices of one induced map, with its kernel and image dimensions."""

    model_config = ConfigDict(frozen=True)

    # The label of the map
    name: str = label("The label of the map")

    # The tags of the rings the map connects
    domain: str = label("The tag of the domain ring")
    codomain: str = label("The tag of the codomain ring")

    # Row i of the grade-k matrix holds the coordinates of the image of basis class i
    matrices: List[List[List[int]]] = Field(default_factory=list, description="The matrices by grade")

    # The kernel and image dimensions by grade
    kernel: List[int] = betti_sequence("The kernel dimension in each grade")
    image: List[int] = betti_sequence("The image dimension in each grade")


class RingReport(BaseModel):
    """Represents the cohomology rings of X, SP²X, dX and (SP²X, dX) with the maps between them."""

    model_config = ConfigDict(frozen=True)

    # The label of the input space
    space: str = label("The label of the input space")

    # The rings, in family order
    rings: List[RingSummary] = Field(default_factory=list, description="The rings")

    # The restriction and relative-to-absolute maps
    maps: List[MapSummary] = Field(default_factory=list, description="The induced maps")

    # Whether image(relative → absolute) equals kernel(restriction) in every grade
    exact: bool = Field(description="Whether the pair sequence is exact at H*(SP²X)")

    def render_text(self) -> str:
        """Render the report as human-readable text."""
        lines = [f"Space: {self.space}"]
        for ring in self.rings:
            kind = "relative" if ring.relative else "absolute"
            lines.append(f"Ring {ring.tag} ({ring.name}, {kind}): Betti {_format_sequence(ring.betti)}")
            for table in ring.products:
                state = "nonzero" if table.nonzero else "zero"
                lines.append(f"  H^{table.left} x H^{table.right} -> H^{table.left + table.right}: {state}")
            lines.append(f"  cup-length of positive part: {ring.cup_length}")
        for summary in self.maps:
            lines.append(
                f"Map {summary.name} ({summary.domain} -> {summary.codomain}): "
                f"kernel {_format_sequence(summary.kernel)}, image {_format_sequence(summary.image)}"
            )
        lines.append(f"Exact at H*(SP2): {'yes' if self.exact else 'no'}")
        return "\n".join(lines) + "\n"
