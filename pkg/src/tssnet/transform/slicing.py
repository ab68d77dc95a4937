"""
Temporal-Slicing Stack Transformation.

Zet een m×T reeks om in een m×ω×o tensor door overlappende vensters van
lengte ω (stap s, dilatie d) op elkaar te stapelen. Slice i begint op
offset i·s van de gepadde reeks, te beginnen bij 0.
"""

from functools import lru_cache

import numpy as np

from ..core import Tensor
from ..data.series import SeriesMatrix
from ..utils.errors import InvalidConfigError
from .config import PaddingMode, TemporalTensorConfig


def slice_count(cfg: TemporalTensorConfig, length: int) -> int:
    """
    Bereken het aantal slices o voor een reeks van lengte T.

    In "conservative" mode: o = floor((T + 2p - 2d(ω-1) - 1)/s + 1).
    In "maximal" mode wordt d(ω-1) gebruikt, zodat elk passend venster meetelt.

    Raises:
        InvalidConfigError: Als T < 1 of de formule o < 1 oplevert
    """
    if length < 1:
        raise InvalidConfigError(f"Reekslengte moet >= 1 zijn (kreeg {length}).")
    span = cfg.dilation * (cfg.window - 1)
    if cfg.slice_count_mode == "conservative":
        span *= 2
    numerator = length + 2 * cfg.padding - span - 1
    # Floor-deling op gehele getallen: floor(a/s + 1) == a // s + 1
    o = numerator // cfg.stride + 1
    if o < 1:
        raise InvalidConfigError(
            f"Configuratie ω={cfg.window}, s={cfg.stride}, d={cfg.dilation}, p={cfg.padding} "
            f"levert o={o} slices op voor T={length}."
        )
    return o


def _pad_values(values: Tensor, padding: int, mode: PaddingMode, local_mean_k: int = 1) -> Tensor:
    """Pad de laatste (tijd)as van een ...×T array symmetrisch."""
    if padding == 0:
        return values.copy()
    length = values.shape[-1]
    if mode == "zero":
        left = np.zeros(values.shape[:-1] + (1,))
        right = left
    elif mode == "edge-replicate":
        left = values[..., :1]
        right = values[..., -1:]
    elif mode == "local-mean":
        if local_mean_k > length:
            raise InvalidConfigError(
                f"local-mean padding met k={local_mean_k} op een reeks van lengte {length}."
            )
        left = values[..., :local_mean_k].mean(axis=-1, keepdims=True)
        right = values[..., -local_mean_k:].mean(axis=-1, keepdims=True)
    else:
        raise InvalidConfigError(f"Onbekende padding mode '{mode}'.")
    reps = (1,) * (values.ndim - 1) + (padding,)
    return np.concatenate([np.tile(left, reps), values, np.tile(right, reps)], axis=-1)


def pad_series(
    x: SeriesMatrix, padding: int, mode: PaddingMode = "edge-replicate", local_mean_k: int = 1
) -> SeriesMatrix:
    """
    Voeg p kolommen toe aan beide kanten van de reeks.

    Args:
        x: De reeks (m×T)
        padding: Aantal kolommen per kant
        mode: "zero", "edge-replicate" of "local-mean"
        local_mean_k: Aantal randkolommen waarover local-mean middelt

    Returns:
        Nieuwe SeriesMatrix van m×(T+2p)
    """
    if padding < 0:
        raise InvalidConfigError(f"padding moet >= 0 zijn (kreeg {padding}).")
    padded = _pad_values(x.values, padding, mode, local_mean_k)
    return SeriesMatrix(padded, list(x.feature_names), x.scaler)


@lru_cache(maxsize=64)
def slice_indices(cfg: TemporalTensorConfig, length: int) -> np.ndarray:
    """
    Indexmatrix van vorm ω×o met idx[w, i] = i·s + w·d in de gepadde reeks.

    Wordt gecached per (cfg, T); de array is read-only.
    """
    o = slice_count(cfg, length)
    offsets = np.arange(o) * cfg.stride
    taps = np.arange(cfg.window) * cfg.dilation
    idx = taps[:, None] + offsets[None, :]
    idx.setflags(write=False)
    return idx


def transform_values(values: Tensor, cfg: TemporalTensorConfig) -> Tensor:
    """
    Pas de transformatie toe op de laatste as van een m×T of N×m×T array.

    Returns:
        Array van vorm ...×m×ω×o
    """
    length = values.shape[-1]
    idx = slice_indices(cfg, length)
    padded = _pad_values(values, cfg.padding, cfg.padding_mode, cfg.local_mean_k)
    return padded[..., idx]


def slice_stack(x: SeriesMatrix | Tensor, cfg: TemporalTensorConfig) -> Tensor:
    """
    Temporal-Slicing Stack Transformation van een m×T reeks.

    Args:
        x: SeriesMatrix of m×T array
        cfg: Transformatie hyperparameters

    Returns:
        Tensor van vorm m×ω×o met out[f, w, i] = X_padded[f, i·s + w·d]

    Raises:
        InvalidConfigError: Als de configuratie geen geldige slice count oplevert
    """
    values = x.values if isinstance(x, SeriesMatrix) else np.asarray(x, dtype=np.float64)
    if values.ndim == 1:
        values = values[None, :]
    return transform_values(values, cfg)
