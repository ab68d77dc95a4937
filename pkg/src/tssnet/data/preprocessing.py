"""
Schalen, chronologisch splitsen en supervised windowing.
"""

import math
from typing import Optional

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from sklearn.preprocessing import MaxAbsScaler, MinMaxScaler, StandardScaler

from config import settings
from config.settings import logger
from ..utils.errors import InvalidConfigError, TooShortError
from .series import ScalerRecord, ScalingMethod, SeriesMatrix, WindowedDataset

SCALING_METHODS = ("none", "max-abs", "min-max", "z-score")


def fit_scaler(x: SeriesMatrix, method: ScalingMethod, fit_range: Optional[tuple[int, int]] = None) -> ScalerRecord:
    """
    Fit een per-feature scaler op een kolombereik.

    Alleen kolommen binnen fit_range bepalen offset en scale; een feature
    zonder spreiding krijgt scale 1 en blijft dus ongewijzigd.

    Args:
        x: De volledige reeks
        method: "none", "max-abs", "min-max" of "z-score"
        fit_range: Half-open (start, stop); standaard de hele reeks

    Returns:
        ScalerRecord met offset en scale per feature
    """
    if method not in SCALING_METHODS:
        raise InvalidConfigError(f"Onbekende schaalmethode '{method}'.")
    start, stop = fit_range if fit_range is not None else (0, x.length)
    if not 0 <= start < stop <= x.length:
        raise InvalidConfigError(f"Fit bereik ({start}, {stop}) valt buiten de reeks van lengte {x.length}.")

    m = x.n_features
    # sklearn verwacht samples × features
    samples = x.values[:, start:stop].T
    if method == "none":
        offset, scale = np.zeros(m), np.ones(m)
    elif method == "max-abs":
        fitted = MaxAbsScaler().fit(samples)
        offset, scale = np.zeros(m), fitted.scale_.astype(np.float64)
    elif method == "min-max":
        fitted = MinMaxScaler().fit(samples)
        offset, scale = fitted.data_min_.astype(np.float64), 1.0 / fitted.scale_
    else:
        fitted = StandardScaler().fit(samples)
        offset, scale = fitted.mean_.astype(np.float64), fitted.scale_.astype(np.float64)

    return ScalerRecord(method=method, offset=offset, scale=scale, fit_range=(start, stop))


def scale(
    x: SeriesMatrix,
    method: ScalingMethod = settings.DEFAULT_SCALING,
    fit_range: Optional[tuple[int, int]] = None,
) -> SeriesMatrix:
    """
    Schaal elke feature; de scaler wordt alleen op fit_range gefit.

    Args:
        x: De reeks
        method: Schaalmethode
        fit_range: Kolommen waarop gefit wordt, typisch het trainingsdeel

    Returns:
        Geschaalde SeriesMatrix met het ScalerRecord erin, zodat
        inverse_scale exact terug kan
    """
    record = fit_scaler(x, method, fit_range)
    logger.debug("Scaler %s gefit op kolommen %s", method, record.fit_range)
    return SeriesMatrix(record.apply(x.values), list(x.feature_names), record)


def inverse_scale(x: SeriesMatrix) -> SeriesMatrix:
    """Draai de schaling van een reeks terug; zonder scaler een kopie."""
    if x.scaler is None:
        return SeriesMatrix(x.values.copy(), list(x.feature_names))
    return SeriesMatrix(x.scaler.invert(x.values), list(x.feature_names))


def split_lengths(length: int, ratios: tuple[float, float, float] = settings.SPLIT_RATIOS) -> tuple[int, int, int]:
    """
    Lengtes van train, valid en test.

    Train en valid worden naar beneden afgerond, de rest gaat naar test.

    Raises:
        InvalidConfigError: Bij niet-positieve ratios of een som ongelijk aan 1
        TooShortError: Als een deel leeg zou zijn
    """
    if len(ratios) != 3 or any(r <= 0 for r in ratios) or not math.isclose(sum(ratios), 1.0, abs_tol=1e-9):
        raise InvalidConfigError(f"Split ratios moeten positief zijn en optellen tot 1 (kreeg {ratios}).")
    train = math.floor(ratios[0] * length + 1e-9)
    valid = math.floor(ratios[1] * length + 1e-9)
    test = length - train - valid
    if min(train, valid, test) < 1:
        raise TooShortError(
            f"Reeks te kort voor split {ratios}: {train}/{valid}/{test}", length=length, required=3
        )
    return train, valid, test


def split_chronological(
    x: SeriesMatrix, ratios: tuple[float, float, float] = settings.SPLIT_RATIOS
) -> tuple[SeriesMatrix, SeriesMatrix, SeriesMatrix]:
    """
    Aaneengesloten train/valid/test delen in tijdsvolgorde.

    Args:
        x: De reeks
        ratios: Fracties voor train, valid en test (standaard 60/20/20)

    Returns:
        (train, valid, test)
    """
    train, valid, _ = split_lengths(x.length, ratios)
    return x.columns(0, train), x.columns(train, train + valid), x.columns(train + valid, x.length)


def window_count(length: int, input_size: int, horizon: int, sample_stride: int = 1) -> int:
    """n = floor((T - T_in - h) / stride) + 1, of 0 als de reeks te kort is."""
    if length < input_size + horizon:
        return 0
    return (length - input_size - horizon) // sample_stride + 1


def make_windows(
    x: SeriesMatrix,
    input_size: int,
    horizon: int,
    sample_stride: int = settings.DEFAULT_SAMPLE_STRIDE,
) -> WindowedDataset:
    """
    Knip een reeks in (input, target) paren.

    Sample j gebruikt kolommen [j·stride, j·stride + T_in) als input en de
    h kolommen daarna als target.

    Args:
        x: Bronreeks (m×T)
        input_size: T_in
        horizon: h
        sample_stride: Stap tussen opeenvolgende samples

    Returns:
        WindowedDataset met n samples

    Raises:
        InvalidConfigError: Bij T_in, h of stride < 1
        TooShortError: Als T < T_in + h
    """
    if input_size < 1 or horizon < 1 or sample_stride < 1:
        raise InvalidConfigError(
            f"T_in, h en sample_stride moeten >= 1 zijn (kreeg {input_size}, {horizon}, {sample_stride})."
        )
    span = input_size + horizon
    if x.length < span:
        raise TooShortError("Reeks te kort voor windowing", length=x.length, required=span)

    windows = sliding_window_view(x.values, span, axis=1)[:, ::sample_stride, :]
    # windows: m × n × span -> n × m × span
    windows = np.ascontiguousarray(windows.transpose(1, 0, 2))
    origins = np.arange(windows.shape[0]) * sample_stride
    return WindowedDataset(
        inputs=windows[:, :, :input_size].copy(),
        targets=windows[:, :, input_size:].copy(),
        origins=origins,
    )
