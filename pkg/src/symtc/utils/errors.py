"""Contains error classes for the symtc engine."""

from logging import getLogger
from typing import List
from typing import Optional
from typing import Tuple

# Set the default logger for the symtc engine
logger = getLogger(__name__)


class ComplexParseError(ValueError):
    """Error raised when a complex file cannot be parsed or fails validation."""

    def __init__(self, source: str, message: str, line: Optional[int] = None):
        """Initialize the error.

        Arguments:
        source (str):   The name of the file (or stream) being parsed.
        message (str):  The error message.
        line (int):     The 1-based line number at which the error occurred, if known.
        """
        location = f"{source}:{line}" if line is not None else source
        self.message = f"{location}: {message}"
        self.source = source
        self.line = line
        super().__init__(self.message)


class InvalidGeneratorError(ValueError):
    """Error raised when an unknown generator is requested or its parameter is invalid."""

    def __init__(self, name: str, allowed: List[str]):
        """Initialize the error.

        Arguments:
        name (str):             The generator specification that was requested.
        allowed (List[str]):    The names of the supported generators.
        """
        self.message = f"generate: Invalid generator '{name}'. Supported generators are {', '.join(allowed)}."
        self.name = name
        self.allowed = allowed
        super().__init__(self.message)


class ShapeMismatchError(ValueError):
    """Error raised when a linear-algebra operation receives operands of incompatible shapes."""

    def __init__(self, method: str, expected: Tuple[int, ...], actual: Tuple[int, ...]):
        """Initialize the error.

        Arguments:
        method (str):       The method that caused the error.
        expected (tuple):   The shape that was expected.
        actual (tuple):     The shape that was received.
        """
        self.message = f"{method}: Expected operand of shape {expected}, but received {actual}."
        self.method = method
        self.expected = expected
        self.actual = actual
        super().__init__(self.message)


class ContainmentError(ValueError):
    """Error raised when a subspace is not contained in the subspace it is supposed to sit in."""

    def __init__(self, method: str, message: str):
        """Initialize the error.

        Arguments:
        method (str):   The method that caused the error.
        message (str):  The error message.
        """
        super().__init__(f"{method}: {message}")
        self.message = message
        self.method = method


class SubcomplexError(ValueError):
    """Error raised when a family of simplices is not closed under faces."""

    def __init__(self, method: str, dimension: int, simplex: int, face: int):
        """Initialize the error.

        Arguments:
        method (str):       The method that caused the error.
        dimension (int):    The dimension of the offending simplex.
        simplex (int):      The id of the offending simplex.
        face (int):         The index of the face which falls outside the family.
        """
        self.message = f"{method}: Face d_{face} of simplex {simplex} in dimension {dimension} is not in the subcomplex"
        self.method = method
        self.dimension = dimension
        self.simplex = simplex
        self.face = face
        super().__init__(self.message)


class MixedRingError(ValueError):
    """Error raised when classes from different cohomology rings are combined."""

    def __init__(self, method: str, left: str, right: str):
        """Initialize the error.

        Arguments:
        method (str):   The method that caused the error.
        left (str):     The label of the ring of the left operand.
        right (str):    The label of the ring of the right operand.
        """
        self.message = f"{method}: Cannot combine a class of '{left}' with a class of '{right}'."
        self.method = method
        self.left = left
        self.right = right
        super().__init__(self.message)


class DisconnectedInputError(ValueError):
    """Error raised when an operation requiring a connected space receives a disconnected one."""

    def __init__(self, method: str, components: int):
        """Initialize the error.

        Arguments:
        method (str):       The method that caused the error.
        components (int):   The number of connected components of the input.
        """
        self.message = f"{method}: Input must be connected, but it has {components} components."
        self.method = method
        self.components = components
        super().__init__(self.message)


class InconsistentBoundsError(ValueError):
    """Error raised when a certified lower bound exceeds the upper bound computed from the declared connectivity."""

    def __init__(self, method: str, lower: int, upper: int, connectivity: int):
        """Initialize the error.

        Arguments:
        method (str):       The method that caused the error.
        lower (int):        The largest lower bound.
        upper (int):        The upper bound computed from the declared connectivity.
        connectivity (int): The declared connectivity.
        """
        self.message = (
            f"{method}: Lower bound {lower} exceeds upper bound {upper}; the declared connectivity "
            f"s={connectivity} cannot hold for this input."
        )
        self.method = method
        self.lower = lower
        self.upper = upper
        self.connectivity = connectivity
        super().__init__(self.message)


class ConnectivityRefutedError(RuntimeError):
    """Error raised when mod-2 homology refutes the declared connectivity."""

    def __init__(self, method: str, connectivity: int, grade: int, betti: int):
        """Initialize the error.

        Arguments:
        method (str):       The method that caused the error.
        connectivity (int): The declared connectivity.
        grade (int):        The first grade at which the reduced Betti number is nonzero.
        betti (int):        The reduced mod-2 Betti number in that grade.
        """
        self.message = (
            f"{method}: Declared connectivity s={connectivity} is refuted: the reduced mod-2 Betti number in "
            f"grade {grade} is {betti}."
        )
        self.method = method
        self.connectivity = connectivity
        self.grade = grade
        self.betti = betti
        super().__init__(self.message)


class InternalAssertionError(RuntimeError):
    """Error raised when an internal invariant of the engine fails."""

    def __init__(self, method: str, message: str):
        """Initialize the error.

        Arguments:
        method (str):   The method that caused the error.
        message (str):  The error message.
        """
        super().__init__(f"{method}: {message}")
        self.message = message
        self.method = method
