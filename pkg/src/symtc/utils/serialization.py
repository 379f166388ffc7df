"""Contains the codecs for complex files and the loader for complexes on disk."""

from logging import getLogger
from pathlib import Path
from typing import List
from typing import Optional
from typing import Tuple

from pydantic import BaseModel
from pydantic import ValidationError

from symtc.types.complex import Complex
from symtc.types.enums import OutputFormat
from symtc.types.fields import label
from symtc.types.fields import natural
from symtc.utils.errors import ComplexParseError

# Set the default logger for the symtc engine
logger = getLogger(__name__)

# The comment prefix under which the text format records the name of a complex
NAME_HEADER = "# name:"


class ComplexDocument(BaseModel):
    """Represents the JSON form of a complex file."""

    # The number of vertices
    vertices: int = natural("The number of vertices")

    # The maximal simplices
    simplices: List[List[int]]

    # An optional label for the complex
    name: Optional[str] = label("A label for the complex", True)


def _detect_format(text: str) -> OutputFormat:
    """Guess the format of a complex file from its first non-blank character."""
    return OutputFormat.JSON if text.lstrip().startswith("{") else OutputFormat.TEXT


def _build(source: str, vertices: int, simplices: List[Tuple[int, ...]], name: Optional[str]) -> Complex:
    """Validate a parsed complex, converting validation failures to parse errors."""
    try:
        return Complex(vertex_count=vertices, maximal_simplices=simplices, name=name)
    except ValidationError as ex:
        raise ComplexParseError(source, "; ".join(error["msg"] for error in ex.errors())) from ex


def _parse_text(text: str, source: str) -> Complex:
    """Parse the text format: one maximal simplex per line as comma-separated vertex indices.

    Arguments:
    text (str):     The file contents.
    source (str):   The name of the file, used in error messages.

    Returns:    The parsed complex.
    """
    name: Optional[str] = None
    simplices: List[Tuple[int, ...]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        # First, pick up the name header and strip comments
        if raw.startswith(NAME_HEADER):
            name = raw[len(NAME_HEADER) :].strip() or None
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        # Next, read the vertex indices of the simplex
        try:
            vertices = [int(entry) for entry in line.split(",")]
        except ValueError as ex:
            raise ComplexParseError(source, f"malformed line '{raw.strip()}'", number) from ex

        # Finally, validate the simplex in the context of its line
        if len(set(vertices)) != len(vertices):
            raise ComplexParseError(source, f"duplicate vertex in simplex {vertices}", number)
        if min(vertices) < 0:
            raise ComplexParseError(source, f"index out of range in simplex {vertices}", number)
        simplices.append(tuple(sorted(vertices)))

    if not simplices:
        raise ComplexParseError(source, "empty complex")
    vertex_count = max(simplex[-1] for simplex in simplices) + 1
    return _build(source, vertex_count, simplices, name)


def _parse_json(text: str, source: str) -> Complex:
    """Parse the JSON format: {"vertices": N, "simplices": [[...], ...]}.

    Arguments:
    text (str):     The file contents.
    source (str):   The name of the file, used in error messages.

    Returns:    The parsed complex.
    """
    try:
        document = ComplexDocument.model_validate_json(text)
    except ValidationError as ex:
        raise ComplexParseError(source, "; ".join(error["msg"] for error in ex.errors())) from ex
    for simplex in document.simplices:
        if len(set(simplex)) != len(simplex):
            raise ComplexParseError(source, f"duplicate vertex in simplex {simplex}")
        if simplex and (min(simplex) < 0 or max(simplex) >= document.vertices):
            raise ComplexParseError(source, f"index out of range in simplex {simplex}")
    simplices = [tuple(sorted(simplex)) for simplex in document.simplices]
    return _build(source, document.vertices, simplices, document.name)


def parse_complex(text: str, source: str = "<input>", fmt: Optional[OutputFormat] = None) -> Complex:
    """Parse a complex file in either supported format.

    Arguments:
    text (str):         The file contents.
    source (str):       The name of the file, used in error messages.
    fmt (OutputFormat): The format of the file; detected from the contents if omitted.

    Returns:    The validated complex; its vertex order is the integer order of the labels.

    Raises:
    ComplexParseError:  If the file is malformed or describes an invalid complex.
    """
    fmt = fmt or _detect_format(text)
    result = _parse_json(text, source) if fmt == OutputFormat.JSON else _parse_text(text, source)
    logger.debug(f"parse_complex: read {len(result.maximal_simplices)} maximal simplices from {source}.")
    return result


def serialize_complex(c: Complex, fmt: OutputFormat = OutputFormat.TEXT) -> str:
    """Write a complex in canonical form; parsing the output gives back an equal complex.

    Arguments:
    c (Complex):        The complex to write.
    fmt (OutputFormat): The format to write.

    Returns:    The file contents.
    """
    if fmt == OutputFormat.JSON:
        document = ComplexDocument(
            vertices=c.vertex_count, simplices=[list(simplex) for simplex in c.maximal_simplices], name=c.name
        )
        return document.model_dump_json(exclude_none=True) + "\n"
    lines = [f"{NAME_HEADER} {c.name}"] if c.name else []
    lines.extend(",".join(str(v) for v in simplex) for simplex in c.maximal_simplices)
    return "\n".join(lines) + "\n"


def load_complex(path: Path) -> Complex:
    """Read and parse a complex file, naming the complex after the file if the file carries no name.

    Arguments:
    path (Path):    The path of the file.

    Returns:    The parsed complex.

    Raises:
    FileNotFoundError:  If the file does not exist.
    ComplexParseError:  If the file cannot be parsed.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"file not found: {path}")
    result = parse_complex(path.read_text(encoding="UTF-8"), str(path))
    if result.name is None:
        result = result.model_copy(update={"name": path.stem})
    logger.info(f"load_complex: loaded '{result.name}' from {path}.")
    return result
