"""Temporal-Slicing Stack Transformation."""

from .config import PADDING_MODES, SLICE_COUNT_MODES, TemporalTensorConfig
from .slicing import pad_series, slice_count, slice_indices, slice_stack, transform_values

__all__ = [
    "TemporalTensorConfig",
    "PADDING_MODES",
    "SLICE_COUNT_MODES",
    "slice_count",
    "pad_series",
    "slice_stack",
    "slice_indices",
    "transform_values",
]
