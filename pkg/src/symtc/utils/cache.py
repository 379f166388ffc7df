"""Contains the on-disk cache for cohomology basis matrices."""

import os
from logging import getLogger
from pathlib import Path
from tempfile import NamedTemporaryFile
from typing import Dict
from typing import List
from typing import Optional

import numpy as np
import pendulum
from Cryptodome.Hash import SHA256
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import ValidationError
from pydantic_extra_types.pendulum_dt import DateTime

# Set the default logger for the symtc engine
logger = getLogger(__name__)

# The version of the cohomology pipeline; it is mixed into every cache key so stale entries are never reused
PIPELINE_VERSION = "1"

# The environment variable that supplies the default cache directory
CACHE_DIR_ENV = "SYMTC_CACHE_DIR"


class CacheEntry(BaseModel):
    """Represents the manifest of one cached set of matrices."""

    model_config = ConfigDict(frozen=True)

    # The content hash under which the matrices are stored
    key: str = Field(description="The content hash under which the matrices are stored")

    # A label of the cached object, for example "SP2,dX"
    tag: str = Field(description="A label of the cached object")

    # The pipeline version that produced the matrices
    pipeline_version: str = Field(description="The pipeline version that produced the matrices")

    # The names of the arrays stored in the archive
    arrays: List[str] = Field(default_factory=list, description="The names of the arrays stored in the archive")

    # When the entry was written
    created: DateTime = Field(description="When the entry was written")


def cache_key(fingerprint: str, tag: str) -> str:
    """Compute the cache key of an object.

    Arguments:
    fingerprint (str):  The content fingerprint of the object.
    tag (str):          A label distinguishing objects derived from the same content.

    Returns:    A SHA256 hex digest over the fingerprint, the tag and the pipeline version.
    """
    return SHA256.new(f"{fingerprint}|{tag}|{PIPELINE_VERSION}".encode("UTF-8")).hexdigest()


class MatrixCache:
    """Stores named numpy arrays under content-hash keys, one compressed archive and one manifest per key."""

    def __init__(self, directory: Path):
        """Create a new cache rooted at a directory, creating the directory if needed.

        Arguments:
        directory (Path):   The cache directory.
        """
        self._directory = Path(directory)
        self._directory.mkdir(parents=True, exist_ok=True)
        logger.debug(f"MatrixCache: using directory {self._directory}.")

    @property
    def directory(self) -> Path:
        """Return the cache directory."""
        return self._directory

    def _archive(self, key: str) -> Path:
        """Return the path of the archive for a key."""
        return self._directory / f"{key}.npz"

    def _manifest(self, key: str) -> Path:
        """Return the path of the manifest for a key."""
        return self._directory / f"{key}.json"

    def _write_atomic(self, path: Path, payload: bytes) -> None:
        """Write a file by writing a temporary file in the same directory and renaming it into place."""
        with NamedTemporaryFile(dir=self._directory, prefix=".tmp-", delete=False) as handle:
            handle.write(payload)
            temporary = handle.name
        os.replace(temporary, path)

    def load(self, key: str) -> Optional[Dict[str, np.ndarray]]:
        """Load the arrays stored under a key.

        Arguments:
        key (str):  The cache key.

        Returns:    The arrays by name, or None if the key is missing or the entry is unreadable.
        """
        archive = self._archive(key)
        manifest = self._manifest(key)
        if not archive.exists() or not manifest.exists():
            logger.debug(f"load: cache miss for {key}.")
            return None
        try:
            entry = CacheEntry.model_validate_json(manifest.read_text(encoding="UTF-8"))
            with np.load(archive) as data:
                arrays = {name: data[name] for name in entry.arrays}
        except (OSError, ValueError, KeyError, ValidationError) as ex:
            logger.warning(f"load: ignoring unreadable cache entry {key}: {ex}")
            return None
        if entry.pipeline_version != PIPELINE_VERSION:
            logger.warning(f"load: ignoring cache entry {key} from pipeline version {entry.pipeline_version}.")
            return None
        logger.debug(f"load: cache hit for {key} ({entry.tag}).")
        return arrays

    def store(self, key: str, tag: str, arrays: Dict[str, np.ndarray]) -> CacheEntry:
        """Store arrays under a key; the archive is written before the manifest that makes it visible.

        Arguments:
        key (str):                      The cache key.
        tag (str):                      A label of the cached object.
        arrays (Dict[str, np.ndarray]): The arrays to store, by name.

        Returns:    The manifest of the new entry.
        """
        with NamedTemporaryFile(dir=self._directory, prefix=".tmp-", suffix=".npz", delete=False) as handle:
            np.savez_compressed(handle, **arrays)
            temporary = handle.name
        os.replace(temporary, self._archive(key))
        entry = CacheEntry(
            key=key, tag=tag, pipeline_version=PIPELINE_VERSION, arrays=sorted(arrays), created=pendulum.now("UTC")
        )
        self._write_atomic(self._manifest(key), entry.model_dump_json(indent=2).encode("UTF-8"))
        logger.info(f"store: cached {len(arrays)} arrays for {tag} under {key}.")
        return entry


def default_cache_dir() -> Optional[Path]:
    """Return the cache directory named by the environment, or None if it is unset or empty."""
    value = os.environ.get(CACHE_DIR_ENV, "").strip()
    return Path(value) if value else None
