"""TemporalTensorConfig: hyperparameters van de Temporal-Slicing Stack Transformation."""

from dataclasses import asdict, dataclass
from typing import Literal

from config import settings
from ..utils.errors import InvalidConfigError

PaddingMode = Literal["zero", "edge-replicate", "local-mean"]
SliceCountMode = Literal["conservative", "maximal"]

PADDING_MODES = ("zero", "edge-replicate", "local-mean")
SLICE_COUNT_MODES = ("conservative", "maximal")


@dataclass(frozen=True)
class TemporalTensorConfig:
    """
    Hyperparameters van de transformatie.

    Attributes:
        window: Venstergrootte ω in tijdstappen
        stride: Stapgrootte s tussen opeenvolgende slices
        dilation: Dilatie d binnen een slice
        padding: Aantal kolommen p dat aan beide kanten wordt toegevoegd
        padding_mode: "zero", "edge-replicate" of "local-mean"
        local_mean_k: Aantal randkolommen voor local-mean padding
        slice_count_mode: "conservative" (formule met 2d(ω-1)) of "maximal" (d(ω-1))
    """

    window: int = settings.DEFAULT_WINDOW
    stride: int = settings.DEFAULT_STRIDE
    dilation: int = settings.DEFAULT_DILATION
    padding: int = settings.DEFAULT_PADDING
    padding_mode: PaddingMode = settings.DEFAULT_PADDING_MODE
    local_mean_k: int = 1
    slice_count_mode: SliceCountMode = "conservative"

    def __post_init__(self):
        if self.window < 1 or self.stride < 1 or self.dilation < 1:
            raise InvalidConfigError(
                f"window, stride en dilation moeten >= 1 zijn "
                f"(kreeg ω={self.window}, s={self.stride}, d={self.dilation})."
            )
        if self.padding < 0:
            raise InvalidConfigError(f"padding moet >= 0 zijn (kreeg {self.padding}).")
        if self.padding_mode not in PADDING_MODES:
            raise InvalidConfigError(f"Onbekende padding_mode '{self.padding_mode}'.")
        if self.local_mean_k < 1:
            raise InvalidConfigError(f"local_mean_k moet >= 1 zijn (kreeg {self.local_mean_k}).")
        if self.slice_count_mode not in SLICE_COUNT_MODES:
            raise InvalidConfigError(f"Onbekende slice_count_mode '{self.slice_count_mode}'.")

    def to_dict(self) -> dict:
        return asdict(self)
