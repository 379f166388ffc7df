"""Contains the definitions for various fields used in the symtc models."""

from pydantic import Field
from pydantic_core import PydanticUndefined


def natural(description: str, optional: bool = False, default: int = 0):
    """Create a field for a natural number.

    Arguments:
    description (str):  A description of the field, shown in the JSON schema.
    optional (bool):    If True, the field will be optional with the given default. If False, the field will be
                        required, with no default.
    default (int):      The default value to use when the field is optional.

    Returns:    A Pydantic Field object for the natural number.
    """
    return Field(default=default if optional else PydanticUndefined, ge=0, description=description)


def label(description: str, optional: bool = False):
    """Create a field for a human-readable label.

    Arguments:
    description (str):  A description of the field, shown in the JSON schema.
    optional (bool):    If True, the field will be optional with a default of None. If False, the field will be
                        required, with no default.

    Returns:    A Pydantic Field object for the label.
    """
    return Field(
        default=None if optional else PydanticUndefined,
        min_length=1,
        max_length=200,
        pattern=r"^\S(?:[^\r\n]*\S)?$",
        description=description,
    )


def betti_sequence(description: str):
    """Create a field for a sequence of Betti numbers, indexed by grade.

    Arguments:
    description (str):  A description of the field, shown in the JSON schema.

    Returns:    A Pydantic Field object for the Betti numbers.
    """
    return Field(default_factory=list, description=description)
