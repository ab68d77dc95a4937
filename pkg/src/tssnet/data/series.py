"""Dataclasses voor tijdreeksen en supervised datasets."""

from dataclasses import dataclass, field, replace
from typing import Iterator, Literal, Optional

import numpy as np

from ..core import Tensor
from ..utils.errors import EmptyInputError, InvalidConfigError, ShapeMismatchError

ScalingMethod = Literal["none", "max-abs", "min-max", "z-score"]


@dataclass(frozen=True, eq=False)
class ScalerRecord:
    """
    Per-feature schaling, omkeerbaar: scaled = (x - offset) / scale.

    Attributes:
        method: Gebruikte schaalmethode
        offset: Verschuiving per feature (lengte m)
        scale: Deler per feature (lengte m), nooit 0
        fit_range: Half-open kolombereik waarop de scaler is gefit
    """

    method: ScalingMethod
    offset: Tensor
    scale: Tensor
    fit_range: tuple[int, int]

    def apply(self, values: Tensor) -> Tensor:
        """Schaal een m×T (of N×m×T) array."""
        return (values - self.offset[:, None]) / self.scale[:, None]

    def invert(self, values: Tensor) -> Tensor:
        """Draai de schaling terug."""
        return values * self.scale[:, None] + self.offset[:, None]

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "offset": self.offset.tolist(),
            "scale": self.scale.tolist(),
            "fit_range": list(self.fit_range),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScalerRecord":
        return cls(
            method=data["method"],
            offset=np.asarray(data["offset"], dtype=np.float64),
            scale=np.asarray(data["scale"], dtype=np.float64),
            fit_range=tuple(data["fit_range"]),
        )


@dataclass(frozen=True, eq=False)
class SeriesMatrix:
    """
    Multivariate tijdreeks X met m features (rijen) en T tijdstappen (kolommen).

    Attributes:
        values: m×T float64 matrix
        feature_names: m namen
        scaler: Optioneel record van de toegepaste schaling
    """

    values: Tensor
    feature_names: list[str] = field(default_factory=list)
    scaler: Optional[ScalerRecord] = None

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim == 1:
            values = values[None, :]
        if values.ndim != 2 or values.shape[0] < 1 or values.shape[1] < 1:
            raise ShapeMismatchError("SeriesMatrix verwacht een m×T matrix", "m×T", values.shape)
        if not np.all(np.isfinite(values)):
            raise InvalidConfigError("SeriesMatrix bevat NaN of Inf waarden.")
        names = list(self.feature_names) or [f"f{i}" for i in range(values.shape[0])]
        if len(names) != values.shape[0]:
            raise ShapeMismatchError("Aantal featurenamen", values.shape[0], len(names))
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "feature_names", names)

    @property
    def n_features(self) -> int:
        return self.values.shape[0]

    @property
    def length(self) -> int:
        return self.values.shape[1]

    def columns(self, start: int, stop: int) -> "SeriesMatrix":
        """Aaneengesloten deel van de reeks, met behoud van namen en scaler."""
        return replace(self, values=self.values[:, start:stop].copy())


@dataclass(frozen=True, eq=False)
class WindowedDataset:
    """
    Supervised samples: n paren (input m×T_in, target m×h).

    Attributes:
        inputs: n×m×T_in array
        targets: n×m×h array
        origins: Startkolom van elk input-venster in de bronreeks
    """

    inputs: Tensor
    targets: Tensor
    origins: np.ndarray

    def __post_init__(self):
        if self.inputs.ndim != 3 or self.targets.ndim != 3:
            raise ShapeMismatchError("WindowedDataset verwacht 3D arrays", 3, (self.inputs.ndim, self.targets.ndim))
        n = self.inputs.shape[0]
        if self.targets.shape[0] != n or len(self.origins) != n:
            raise ShapeMismatchError("Aantal inputs, targets en origins", n, (self.targets.shape[0], len(self.origins)))
        if self.inputs.shape[1] != self.targets.shape[1]:
            raise ShapeMismatchError("Aantal features van input en target", self.inputs.shape[1], self.targets.shape[1])

    def __len__(self) -> int:
        return self.inputs.shape[0]

    @property
    def n_features(self) -> int:
        return self.inputs.shape[1]

    @property
    def input_length(self) -> int:
        return self.inputs.shape[2]

    @property
    def horizon(self) -> int:
        return self.targets.shape[2]

    def require_samples(self) -> None:
        if len(self) == 0:
            raise EmptyInputError("Dataset bevat geen samples.")

    def subset(self, indices) -> "WindowedDataset":
        indices = np.asarray(indices, dtype=np.int64)
        return WindowedDataset(self.inputs[indices], self.targets[indices], self.origins[indices])

    def batches(self, batch_size: int, order=None) -> Iterator[tuple[Tensor, Tensor]]:
        """Itereer over (inputs, targets) batches in de gegeven volgorde."""
        order = np.arange(len(self)) if order is None else np.asarray(order)
        for start in range(0, len(order), batch_size):
            idx = order[start:start + batch_size]
            yield self.inputs[idx], self.targets[idx]
