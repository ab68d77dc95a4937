"""Utility modules voor de TSSNet toolkit."""

from .errors import (
    DegenerateSampleError,
    EmptyInputError,
    InvalidConfigError,
    InvalidShapeError,
    OutOfBoundsError,
    ShapeMismatchError,
    TooShortError,
    TSSNetError,
)

__all__ = [
    "TSSNetError",
    "ShapeMismatchError",
    "InvalidShapeError",
    "OutOfBoundsError",
    "InvalidConfigError",
    "EmptyInputError",
    "TooShortError",
    "DegenerateSampleError",
]
