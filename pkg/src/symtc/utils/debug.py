"""Contains the debug dumps of symmetric-square families."""

from logging import getLogger
from pathlib import Path
from typing import Dict
from typing import List

from pydantic import BaseModel
from pydantic import Field

from symtc.services.base import SymmetricSquareFamily
from symtc.topology.sym_square import EquivariantPair

# Set the default logger for the symtc engine
logger = getLogger(__name__)


class OrbitRow(BaseModel):
    """Describes one simplex of SP²X in the orbit table."""

    grade: int = Field(description="The grade of the orbit")
    orbit: int = Field(description="The id of the orbit in SP²X")
    representative: int = Field(description="The id of the canonical representative in X×X")
    swapped: int = Field(description="The id of the swapped representative in X×X")
    on_diagonal: bool = Field(description="Whether the orbit lies in dX")


class SymSquareDump(BaseModel):
    """Describes the grade counts of a symmetric-square family and its orbit table."""

    space: str = Field(description="The label of X")
    grades: Dict[str, List[int]] = Field(description="The nondegenerate simplex counts of X, X×X, SP²X and dX")
    orbits: List[OrbitRow] = Field(default_factory=list, description="The orbit table")


def orbit_table(pair: EquivariantPair) -> List[OrbitRow]:
    """Build the orbit table of a symmetric square.

    Arguments:
    pair (EquivariantPair): A fully built symmetric square.

    Returns:    One row per simplex of SP²X, grade by grade.
    """
    rows = []
    for m in range(pair.quotient.dimension + 1):  # type: ignore[union-attr]
        for orbit in range(pair.quotient.count(m)):  # type: ignore[union-attr]
            simplex = pair.orbit_simplex(m, orbit).representative
            rows.append(
                OrbitRow(
                    grade=m,
                    orbit=orbit,
                    representative=pair.total.lookup(m, simplex.key),
                    swapped=pair.total.lookup(m, simplex.swapped().key),
                    on_diagonal=simplex.first == simplex.second,
                )
            )
    return rows


def write_debug(family: SymmetricSquareFamily, directory: Path) -> List[Path]:
    """Write the orbit table and every coboundary matrix of a family.

    Arguments:
    family (SymmetricSquareFamily): The family to dump.
    directory (Path):               The directory to write to; created if needed.

    Returns:    The paths of the files written.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    # First, write the grade counts and the orbit table
    pair = family.pair
    dump = SymSquareDump(
        space=family.x.name,
        grades={
            "X": list(family.x.grades),
            "XxX": list(family.product.grades),
            "SP2": list(family.quotient.grades),
            "dX": list(family.image_diagonal.grades),
        },
        orbits=orbit_table(pair),
    )
    written = [directory / "sym_square.json"]
    written[0].write_text(dump.model_dump_json(indent=2) + "\n", encoding="UTF-8")

    # Next, write the coboundaries of every complex in the family
    for tag, ring in family.rings():
        safe = str(tag).replace(",", "-")
        for k in range(ring.complex.dimension + 1):
            path = directory / f"coboundary_{safe}_{k}.txt"
            path.write_text(ring.complex.coboundary(k).dump() + "\n", encoding="UTF-8")
            written.append(path)
    logger.info(f"write_debug: wrote {len(written)} files to {directory}.")
    return written
