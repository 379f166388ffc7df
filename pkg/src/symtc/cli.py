"""Contains the command-line entry point of symtc."""

import logging
import sys
from argparse import ArgumentParser
from logging import getLogger
from pathlib import Path
from typing import List
from typing import Optional
from typing import TextIO

from pydantic import ValidationError

from symtc.engine import TopologyEngine
from symtc.topology.generators import parse_generator
from symtc.topology.simplicial import to_simplicial_set
from symtc.types.complex import Complex
from symtc.types.config import DEFAULT_DEBUG_DIR
from symtc.types.config import RunConfig
from symtc.types.enums import Command
from symtc.types.enums import OutputFormat
from symtc.utils.cache import MatrixCache
from symtc.utils.cache import default_cache_dir
from symtc.utils.debug import write_debug
from symtc.utils.errors import ComplexParseError
from symtc.utils.errors import ConnectivityRefutedError
from symtc.utils.errors import ContainmentError
from symtc.utils.errors import DisconnectedInputError
from symtc.utils.errors import InconsistentBoundsError
from symtc.utils.errors import InternalAssertionError
from symtc.utils.errors import InvalidGeneratorError
from symtc.utils.errors import MixedRingError
from symtc.utils.errors import ShapeMismatchError
from symtc.utils.errors import SubcomplexError
from symtc.utils.serialization import load_complex
from symtc.utils.serialization import serialize_complex

# Set the default logger for the symtc engine
logger = getLogger(__name__)

# Exit codes of the command-line tool
EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_REFUTED = 3
EXIT_INTERNAL_ERROR = 4

# The errors reported as bad input
INPUT_ERRORS = (
    FileNotFoundError,
    ComplexParseError,
    InvalidGeneratorError,
    DisconnectedInputError,
    InconsistentBoundsError,
)

# The errors reported as internal failures
INTERNAL_ERRORS = (InternalAssertionError, ShapeMismatchError, ContainmentError, SubcomplexError, MixedRingError)


def build_parser() -> ArgumentParser:
    """Build the argument parser for the command-line tool."""
    parser = ArgumentParser(prog="symtc", description="Certified bounds for symmetrized topological complexity.")
    parser.add_argument("command", choices=[command.value for command in Command], help="The command to run")
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--in", dest="input_path", type=Path, help="A complex file to read")
    source.add_argument("--generate", dest="generator", help="A built-in complex, NAME[:PARAM]")
    parser.add_argument("--connectivity", type=int, default=None, help="The declared connectivity s (default 0)")
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="The report format",
    )
    parser.add_argument("--cache", dest="cache_dir", type=Path, default=None, help="A directory for cached matrices")
    parser.add_argument("--dump-debug", action="store_true", help="Write the orbit table and coboundary matrices")
    parser.add_argument("--debug-dir", type=Path, default=DEFAULT_DEBUG_DIR, help="The directory for debug dumps")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Log more (repeat for debug output)")
    return parser


def configure_logging(verbosity: int) -> None:
    """Send logs to stderr: warnings by default, info with one -v and debug with two."""
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


def load_input(config: RunConfig) -> Complex:
    """Load the complex named by a run configuration."""
    if config.input_path is not None:
        return load_complex(config.input_path)
    return parse_generator(config.generator)  # type: ignore[arg-type]


def run(config: RunConfig, out: TextIO) -> int:
    """Run one command and write its report.

    Arguments:
    config (RunConfig): The configuration of the run.
    out (TextIO):       The stream to write the report to.

    Returns:    The exit code of the run.
    """
    # First, load the input; the generate command only writes it back in canonical form
    complex_ = load_input(config)
    if config.command == Command.GENERATE:
        out.write(serialize_complex(complex_, config.output_format))
        return EXIT_OK

    # Next, set up the engine with its cache
    cache_dir = config.cache_dir or default_cache_dir()
    engine = TopologyEngine(MatrixCache(cache_dir) if cache_dir is not None else None)
    x = to_simplicial_set(complex_)
    if config.dump_debug:
        write_debug(engine.family(x), config.debug_dir)

    # Now, run the command
    if config.command == Command.HOMOLOGY:
        report = engine.homology(x)
    elif config.command == Command.RING:
        report = engine.ring_report(x)
    else:
        report = engine.bounds_report(x, config.connectivity, config.connectivity_declared)

    # Finally, write the report in the requested format
    if config.output_format == OutputFormat.JSON:
        out.write(report.model_dump_json(indent=2) + "\n")
    else:
        out.write(report.render_text())
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command-line tool.

    Arguments:
    argv (List[str]):   The command-line arguments, without the program name; read from sys.argv if omitted.

    Returns:    0 on success, 2 for bad input, 3 when the declared connectivity is refuted and 4 for internal failures.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else EXIT_INPUT_ERROR

    configure_logging(args.verbose)
    try:
        config = RunConfig(
            command=args.command,
            input_path=args.input_path,
            generator=args.generator,
            connectivity=args.connectivity if args.connectivity is not None else 0,
            connectivity_declared=args.connectivity is not None,
            output_format=args.output_format,
            cache_dir=args.cache_dir,
            verbosity=args.verbose,
            dump_debug=args.dump_debug,
            debug_dir=args.debug_dir,
        )
    except ValidationError as ex:
        sys.stderr.write(f"error: {'; '.join(error['msg'] for error in ex.errors())}\n")
        return EXIT_INPUT_ERROR

    try:
        return run(config, sys.stdout)
    except INPUT_ERRORS as ex:
        sys.stderr.write(f"error: {ex}\n")
        return EXIT_INPUT_ERROR
    except ConnectivityRefutedError as ex:
        sys.stderr.write(f"refuted: {ex}\n")
        return EXIT_REFUTED
    except INTERNAL_ERRORS as ex:
        logger.exception(f"main: internal failure: {ex}")
        sys.stderr.write(f"internal error: {ex}\n")
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
