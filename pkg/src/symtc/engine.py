"""Contains the topology engine, the entry point for every computation on a simplicial set."""

from logging import getLogger

from symtc.services.base import BaseEngine
from symtc.services.bounds import BoundsMixin
from symtc.services.homology import HomologyMixin
from symtc.services.ring import RingMixin

# Set the default logger for the symtc engine
logger = getLogger(__name__)


class TopologyEngine(BaseEngine, HomologyMixin, RingMixin, BoundsMixin):
    """Engine computing homology, cohomology rings and TC^Σ bounds of symmetric squares.

    Work is shared between calls: the symmetric-square family of each input is built once per engine, and cohomology
    basis data goes through the cache when one is configured.
    """
