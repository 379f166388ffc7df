"""Contains the configuration of a command-line run."""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator

from symtc.types.enums import Command
from symtc.types.enums import OutputFormat
from symtc.types.fields import natural

# The directory debug dumps are written to when none is given
DEFAULT_DEBUG_DIR = Path("symtc-debug")


class RunConfig(BaseModel):
    """Represents the validated configuration of one command-line run."""

    model_config = ConfigDict(frozen=True)

    # The command to run
    command: Command = Field(description="The command to run")

    # The complex file to read; exclusive with generator
    input_path: Optional[Path] = Field(default=None, description="The complex file to read")

    # The generator specification, NAME[:PARAM]; exclusive with input_path
    generator: Optional[str] = Field(default=None, description="The generator specification")

    # The connectivity s fed into the upper bound
    connectivity: int = natural("The connectivity fed into the upper bound", True)

    # Whether the connectivity was given on the command line
    connectivity_declared: bool = Field(default=False, description="Whether the connectivity was declared")

    # The format in which the report is written
    output_format: OutputFormat = Field(default=OutputFormat.TEXT, description="The report format")

    # The directory holding cached matrices; no caching if omitted
    cache_dir: Optional[Path] = Field(default=None, description="The cache directory")

    # The logging verbosity: 0 for warnings, 1 for info, 2 for debug
    verbosity: int = natural("The logging verbosity", True)

    # Whether to write debug dumps, and where
    dump_debug: bool = Field(default=False, description="Whether to write debug dumps")
    debug_dir: Path = Field(default=DEFAULT_DEBUG_DIR, description="The directory for debug dumps")

    @model_validator(mode="after")
    def _check_input(self) -> "RunConfig":
        """Verify that exactly one input source was given."""
        if (self.input_path is None) == (self.generator is None):
            raise ValueError("exactly one of --in and --generate must be given")
        return self
