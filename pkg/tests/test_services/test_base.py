"""Tests the functionality of the symtc.services.base module."""

import pytest

from symtc.services.base import BaseEngine
from symtc.services.base import PipelineConfiguration
from symtc.services.base import SymmetricSquareFamily
from symtc.services.base import pipeline_step
from symtc.types.enums import SpaceTag
from symtc.utils.errors import DisconnectedInputError
from tests.testutils import sset_of


class _Steps:
    """Minimal engine used to exercise the pipeline_step decorator."""

    def __init__(self, verify):
        self.verify_connected = verify

    @pipeline_step(name="plain")
    def plain(self, x, value: int) -> int:
        """Return the value doubled."""
        return 2 * value

    @pipeline_step(name="guarded", requires_connected=True)
    def guarded(self, x) -> str:
        """Return the name of the input."""
        return x.name


def test_pipeline_step_skips_connectivity_check(mocker, circle):
    """Test that a plain step runs without verifying connectivity."""
    verify = mocker.MagicMock()
    steps = _Steps(verify)
    assert steps.plain(circle, 21) == 42
    verify.assert_not_called()
    assert _Steps.plain.__name__ == "plain"


def test_pipeline_step_verifies_connectivity(mocker, circle):
    """Test that a guarded step verifies connectivity with its own configuration before running."""
    verify = mocker.MagicMock()
    steps = _Steps(verify)
    assert steps.guarded(circle) == "S^1"
    verify.assert_called_once_with(circle, PipelineConfiguration(name="guarded", requires_connected=True))


def test_pipeline_step_propagates_errors(mocker, circle):
    """Test that an error raised by the connectivity check stops the step."""
    verify = mocker.MagicMock(side_effect=DisconnectedInputError("guarded", 2))
    steps = _Steps(verify)
    with pytest.raises(DisconnectedInputError) as ex_info:
        steps.guarded(circle)
    assert ex_info.value.method == "guarded"
    assert ex_info.value.components == 2


def test_family_is_shared_by_content():
    """Test that the engine builds one family per simplicial set content."""
    engine = BaseEngine()
    first = engine.family(sset_of("sphere", 1))
    assert engine.family(sset_of("sphere", 1)) is first
    assert engine.family(sset_of("sphere", 2)) is not first
    assert engine.cache is None


def test_verify_connected():
    """Test that verify_connected accepts connected inputs and rejects disconnected ones."""
    # First, verify that a connected input passes
    engine = BaseEngine()
    config = PipelineConfiguration(name="test", requires_connected=True)
    engine.verify_connected(sset_of("sphere", 1), config)

    # Next, verify that two points are rejected
    with pytest.raises(DisconnectedInputError) as ex_info:
        engine.verify_connected(sset_of("sphere", 0), config)

    # Finally, verify the error details
    assert ex_info.value.method == "test"
    assert ex_info.value.components == 2
    assert str(ex_info.value) == "test: Input must be connected, but it has 2 components."


def test_family_members(circle):
    """Test that a family exposes every space and ring in family order."""
    family = SymmetricSquareFamily(circle)
    assert family.x is circle
    assert family.product is family.pair.total
    assert family.quotient is family.pair.quotient
    assert family.image_diagonal is family.pair.image_diagonal
    assert [len(grade) for grade in family.image_diagonal_family] == [3, 3]
    assert [tag for tag, _ in family.rings()] == [
        SpaceTag.X,
        SpaceTag.PRODUCT,
        SpaceTag.SYMMETRIC_SQUARE,
        SpaceTag.IMAGE_DIAGONAL,
        SpaceTag.PAIR,
    ]
    assert family.ring_pair.name == "(SP2(S^1), dS^1)"
    assert family.ring_x is family.ring_x
