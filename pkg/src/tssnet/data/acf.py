"""Autocorrelatie diagnostiek voor het inschatten van seizoenspatronen."""

import numpy as np

from ..utils.errors import DegenerateSampleError, InvalidConfigError
from .series import SeriesMatrix


def acf(series, max_lag: int) -> np.ndarray:
    """
    Autocorrelatie r(k) voor k = 0..max_lag.

    Het gemiddelde wordt één keer over de hele reeks genomen en de
    autocovariantie wordt gedeeld door Σ(y - ȳ)², zodat r(0) precies 1 is.

    Args:
        series: 1D reeks (één feature)
        max_lag: Grootste lag, kleiner dan T

    Returns:
        Array van lengte max_lag + 1

    Raises:
        InvalidConfigError: Als max_lag < 0 of >= T
        DegenerateSampleError: Als de reeks constant is
    """
    y = np.asarray(series, dtype=np.float64).ravel()
    n = y.size
    if max_lag < 0 or max_lag >= n:
        raise InvalidConfigError(f"max_lag moet in [0, {n - 1}] liggen (kreeg {max_lag}).")
    data = y - y.sum() / n
    denom = float(np.dot(data, data))
    if denom == 0.0:
        raise DegenerateSampleError("ACF van een constante reeks is niet gedefinieerd.")

    r = np.empty(max_lag + 1)
    r[0] = 1.0
    for k in range(1, max_lag + 1):
        r[k] = np.dot(data[: n - k], data[k:]) / denom
    return r


def acf_matrix(x: SeriesMatrix, max_lag: int) -> np.ndarray:
    """ACF per feature, vorm m×(max_lag + 1)."""
    return np.stack([acf(row, max_lag) for row in x.values])


def dominant_lag(r: np.ndarray) -> int:
    """Lag k >= 1 met de hoogste autocorrelatie."""
    if len(r) < 2:
        raise InvalidConfigError("dominant_lag heeft minstens max_lag = 1 nodig.")
    return int(np.argmax(r[1:])) + 1
