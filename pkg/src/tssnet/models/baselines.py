"""Baselines: de 1D CNN over het ruwe m×T vlak en persistence."""

from typing import Literal

import numpy as np

from config import settings
from config.settings import logger
from ..core import Tensor
from ..data.series import SeriesMatrix
from ..nn import ConvSpec, DenseSpec, FlattenLayer, MaxPool2dLayer, init_params, make_rng
from ..utils.errors import InvalidConfigError
from .network import LayerStack

PersistenceMode = Literal["last-value", "seasonal"]


class Cnn1dBaseline(LayerStack):
    """
    Eén conv + pool blok en twee dense layers op de reeks als
    single-channel beeld (1×m×T).
    """

    kind = "cnn1d"

    def __init__(self, layers, arch: dict):
        super().__init__(layers, arch["m"], arch["T"], arch["h"], arch)

    def adapt_input(self, x: Tensor) -> Tensor:
        return x[:, None, :, :]


def build_cnn1d(
    m: int,
    T: int,
    h: int,
    kernel_height: int | None = None,
    kernel_width: int = 3,
    hidden_multiplier: int = settings.DEFAULT_HIDDEN_MULTIPLIER,
    seed: int = 0,
    n_kernels: int | None = None,
) -> Cnn1dBaseline:
    """
    Bouw de 1D CNN baseline.

    Args:
        m: Aantal features
        T: Inputlengte
        h: Horizon
        kernel_height: Kernelhoogte, standaard m (valid, dus output hoogte 1)
        kernel_width: Kernelbreedte over de tijd
        hidden_multiplier: fc1 breedte = hidden_multiplier·m·h
        seed: Seed voor de initialisatie
        n_kernels: Aantal kernels, standaard m

    Raises:
        InvalidConfigError: Als de kernel niet in het m×T vlak past
    """
    kernel_height = m if kernel_height is None else kernel_height
    n_kernels = m if n_kernels is None else n_kernels
    if min(m, T, h) < 1:
        raise InvalidConfigError(f"m, T en h moeten >= 1 zijn (kreeg {m}, {T}, {h}).")
    if not 1 <= kernel_height <= m:
        raise InvalidConfigError(f"Kernelhoogte {kernel_height} past niet bij m={m}.")
    if not 1 <= kernel_width <= T:
        raise InvalidConfigError(f"Kernelbreedte {kernel_width} past niet bij T={T}.")
    if hidden_multiplier < 2:
        raise InvalidConfigError(f"hidden_multiplier moet >= 2 zijn (kreeg {hidden_multiplier}).")

    rng = make_rng(seed)
    conv = init_params(ConvSpec(n_kernels, 1, kernel_height, kernel_width, "valid"), rng)
    pool = MaxPool2dLayer(*settings.POOL_SIZE)
    height, width = pool.output_plane(*conv.output_plane(m, T))
    hidden = hidden_multiplier * m * h
    fc1 = init_params(DenseSpec(n_kernels * height * width, hidden), rng)
    out = init_params(DenseSpec(hidden, m * h), rng)

    arch = {
        "kind": Cnn1dBaseline.kind,
        "m": m,
        "T": T,
        "h": h,
        "kernel_height": kernel_height,
        "kernel_width": kernel_width,
        "hidden_multiplier": hidden_multiplier,
        "seed": seed,
        "n_kernels": n_kernels,
    }
    layers = [("conv1", conv), ("pool1", pool), ("flatten", FlattenLayer()), ("fc1", fc1), ("out", out)]
    model = Cnn1dBaseline(layers, arch)
    logger.debug("1D CNN baseline gebouwd: %s", model.describe())
    return model


def _persistence(values: Tensor, h: int, mode: PersistenceMode, period: int | None) -> Tensor:
    length = values.shape[-1]
    if h < 1:
        raise InvalidConfigError(f"Horizon moet >= 1 zijn (kreeg {h}).")
    if mode == "last-value":
        if length < 1:
            raise InvalidConfigError("last-value persistence op een lege reeks.")
        return np.repeat(values[..., -1:], h, axis=-1)
    if mode == "seasonal":
        if period is None or period < 1:
            raise InvalidConfigError("Seasonal persistence heeft een periode >= 1 nodig.")
        if length < period:
            raise InvalidConfigError(f"Seasonal persistence met periode {period} op T={length}.")
        season = values[..., length - period:]
        return season[..., np.arange(h) % period]
    raise InvalidConfigError(f"Onbekende persistence mode '{mode}'.")


def persistence_predict(
    x: SeriesMatrix | Tensor, h: int, mode: PersistenceMode = "last-value", period: int | None = None
) -> Tensor:
    """
    Naïeve voorspelling.

    last-value herhaalt de laatste kolom h keer; seasonal herhaalt de laatste
    `period` kolommen cyclisch.

    Returns:
        m×h array

    Raises:
        InvalidConfigError: Bij een onbekende mode of T < period
    """
    values = x.values if isinstance(x, SeriesMatrix) else np.asarray(x, dtype=np.float64)
    if values.ndim == 1:
        values = values[None, :]
    return _persistence(values, h, mode, period)


class PersistenceForecaster:
    """Persistence met dezelfde predict interface als de netwerken."""

    kind = "persistence"

    def __init__(self, n_features: int, input_length: int, horizon: int,
                 mode: PersistenceMode = "last-value", period: int | None = None):
        self.n_features = n_features
        self.input_length = input_length
        self.horizon = horizon
        self.mode = mode
        self.period = period
        self.arch = {"kind": self.kind, "m": n_features, "T": input_length, "h": horizon,
                     "mode": mode, "period": period}
        # Valideer de mode direct
        _persistence(np.zeros((1, max(input_length, 1))), horizon, mode, period)

    def predict(self, inputs: Tensor, batch_size: int | None = None) -> Tensor:
        inputs = np.asarray(inputs, dtype=np.float64)
        return _persistence(inputs, self.horizon, self.mode, self.period)
