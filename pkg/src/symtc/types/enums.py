"""Contains enums common to all symtc types."""

from enum import StrEnum


class GeneratorKind(StrEnum):
    """Identifies a built-in complex generator."""

    SPHERE = "sphere"  # Boundary of the (n+1)-simplex; takes the parameter n
    TORUS = "torus"  # The 9-vertex, 18-triangle grid triangulation
    RP2 = "rp2"  # The 6-vertex triangulation of the real projective plane
    POINT = "point"
    INTERVAL = "interval"
    OCTAHEDRON = "octahedron"  # Suspension of a square, a second triangulation of the 2-sphere


class Command(StrEnum):
    """Identifies the command being run from the command line."""

    HOMOLOGY = "homology"
    RING = "ring"
    BOUNDS = "bounds"
    GENERATE = "generate"


class OutputFormat(StrEnum):
    """Identifies the format in which reports are written."""

    TEXT = "text"
    JSON = "json"


class ConnectivityVerdict(StrEnum):
    """Describes the outcome of checking a declared connectivity against mod-2 homology."""

    CONSISTENT = "consistent"  # No reduced Betti number through the declared grade is nonzero
    REFUTED = "refuted"  # Some reduced Betti number through the declared grade is nonzero


class SpaceTag(StrEnum):
    """Identifies the spaces of the symmetric-square family, used for report keys and cache keys."""

    X = "X"
    PRODUCT = "XxX"
    SYMMETRIC_SQUARE = "SP2"
    IMAGE_DIAGONAL = "dX"
    PAIR = "SP2,dX"
