"""
Tests voor de Temporal-Slicing Stack Transformation.

De randomized test vergelijkt slice_stack met een naïeve dubbele lus die
rechtstreeks de definitie volgt.
"""

import time

import numpy as np
import pytest

from src.tssnet.data import SeriesMatrix
from src.tssnet.transform import TemporalTensorConfig, pad_series, slice_count, slice_stack
from src.tssnet.utils.errors import InvalidConfigError


def naive_pad(values: np.ndarray, p: int, mode: str, k: int) -> np.ndarray:
    m, T = values.shape
    out = np.zeros((m, T + 2 * p))
    for f in range(m):
        for t in range(T + 2 * p):
            src = t - p
            if 0 <= src < T:
                out[f, t] = values[f, src]
            elif mode == "zero":
                out[f, t] = 0.0
            elif mode == "edge-replicate":
                out[f, t] = values[f, 0] if src < 0 else values[f, T - 1]
            else:
                edge = values[f, :k] if src < 0 else values[f, T - k:]
                out[f, t] = edge.mean()
    return out


def naive_slicer(values: np.ndarray, cfg: TemporalTensorConfig) -> np.ndarray:
    """Dubbele lus: out[f, w, i] = X_padded[f, i·s + w·d]."""
    m, T = values.shape
    padded = naive_pad(values, cfg.padding, cfg.padding_mode, cfg.local_mean_k)
    span = cfg.dilation * (cfg.window - 1) * (2 if cfg.slice_count_mode == "conservative" else 1)
    o = int(np.floor((T + 2 * cfg.padding - span - 1) / cfg.stride + 1))
    if o < 1:
        return None
    out = np.zeros((m, cfg.window, o))
    for i in range(o):
        for w in range(cfg.window):
            out[:, w, i] = padded[:, i * cfg.stride + w * cfg.dilation]
    return out


def test_slice_count_examples():
    assert slice_count(TemporalTensorConfig(window=1, stride=1), 13) == 13
    assert slice_count(TemporalTensorConfig(window=8, stride=2), 168) == 77
    assert slice_count(TemporalTensorConfig(window=3, stride=1), 6) == 2
    with pytest.raises(InvalidConfigError):
        slice_count(TemporalTensorConfig(window=4, stride=1), 4)


def test_slice_count_maximal_mode():
    cfg = TemporalTensorConfig(window=3, stride=1, slice_count_mode="maximal")
    # Elk passend venster telt mee: T - (ω - 1)
    assert slice_count(cfg, 6) == 4
    out = slice_stack(SeriesMatrix([[0, 1, 2, 3, 4, 5]]), cfg)
    assert out.shape == (1, 3, 4)
    np.testing.assert_array_equal(out[0, :, -1], [3, 4, 5])
    # De conservatieve telling laat de laatste twee vensters weg
    assert slice_count(TemporalTensorConfig(window=3, stride=1), 6) == 2


def test_config_validation():
    with pytest.raises(InvalidConfigError):
        TemporalTensorConfig(window=0)
    with pytest.raises(InvalidConfigError):
        TemporalTensorConfig(stride=0)
    with pytest.raises(InvalidConfigError):
        TemporalTensorConfig(padding=-1)
    with pytest.raises(InvalidConfigError):
        TemporalTensorConfig(padding_mode="mirror")


def test_pad_series_examples():
    x = SeriesMatrix([[1.0, 2.0, 3.0]])
    for mode in ("zero", "edge-replicate", "local-mean"):
        np.testing.assert_array_equal(pad_series(x, 0, mode).values, x.values)
    np.testing.assert_array_equal(pad_series(x, 2, "zero").values, [[0, 0, 1, 2, 3, 0, 0]])
    np.testing.assert_array_equal(pad_series(x, 1, "edge-replicate").values, [[1, 1, 2, 3, 3]])
    np.testing.assert_allclose(pad_series(x, 1, "local-mean", local_mean_k=2).values, [[1.5, 1, 2, 3, 2.5]])
    with pytest.raises(InvalidConfigError):
        pad_series(x, 1, "local-mean", local_mean_k=4)


def test_slice_stack_two_features():
    x = SeriesMatrix([[1, 2, 3, 4], [5, 6, 7, 8]])
    out = slice_stack(x, TemporalTensorConfig(window=2, stride=1))
    assert out.shape == (2, 2, 2)
    np.testing.assert_array_equal(out[:, :, 0], [[1, 2], [5, 6]])
    np.testing.assert_array_equal(out[:, :, 1], [[2, 3], [6, 7]])


def test_slice_stack_degenerate_window():
    out = slice_stack(SeriesMatrix([[7, 8, 9]]), TemporalTensorConfig(window=1, stride=1))
    assert out.shape == (1, 1, 3)
    np.testing.assert_array_equal(out.ravel(), [7, 8, 9])


def test_slice_stack_dilation():
    x = np.arange(1.0, 8.0)[None, :]
    out = slice_stack(x, TemporalTensorConfig(window=2, stride=1, dilation=2))
    assert out.shape == (1, 2, 3)
    for i in range(3):
        np.testing.assert_array_equal(out[0, :, i], [x[0, i], x[0, i + 2]])


def test_univariate_gives_window_by_slices_matrix():
    out = slice_stack(np.arange(20.0), TemporalTensorConfig(window=4, stride=2))
    assert out[0].shape == (4, slice_count(TemporalTensorConfig(window=4, stride=2), 20))


def test_oracle_equivalence_randomized():
    rng = np.random.default_rng(2024)
    modes = ("zero", "edge-replicate", "local-mean")
    count_modes = ("conservative", "maximal")
    seen = set()
    checked = 0
    start = time.perf_counter()
    for _ in range(1000):
        m = int(rng.integers(1, 5))
        T = int(rng.integers(1, 33))
        cfg = TemporalTensorConfig(
            window=int(rng.integers(1, 7)),
            stride=int(rng.integers(1, 5)),
            dilation=int(rng.integers(1, 4)),
            padding=int(rng.integers(0, 4)),
            padding_mode=modes[int(rng.integers(0, 3))],
            local_mean_k=int(rng.integers(1, T + 1)),
            slice_count_mode=count_modes[int(rng.integers(0, 2))],
        )
        values = rng.standard_normal((m, T))
        expected = naive_slicer(values, cfg)
        if expected is None:
            with pytest.raises(InvalidConfigError):
                slice_stack(values, cfg)
            continue
        out = slice_stack(values, cfg)
        if cfg.padding_mode == "local-mean" and cfg.padding > 0:
            # Gemiddelden: alleen de sommeervolgorde kan verschillen
            np.testing.assert_allclose(out, expected, rtol=0, atol=1e-12)
        else:
            np.testing.assert_array_equal(out, expected)
        o = out.shape[2]
        assert slice_count(cfg, T) == o
        # Laatste slice valt binnen de gepadde reeks
        assert (o - 1) * cfg.stride + (cfg.window - 1) * cfg.dilation <= T + 2 * cfg.padding - 1
        checked += 1
        seen.add(cfg.slice_count_mode)
    assert checked > 100
    assert seen == set(count_modes)
    assert time.perf_counter() - start < 10.0


def test_no_invented_values(rng):
    values = rng.standard_normal((3, 25))
    cfg = TemporalTensorConfig(window=4, stride=3, dilation=2, padding=2, padding_mode="zero")
    out = slice_stack(values, cfg)
    padded = pad_series(SeriesMatrix(values), 2, "zero").values
    for f in range(3):
        for w in range(cfg.window):
            for i in range(out.shape[2]):
                assert out[f, w, i] == padded[f, i * cfg.stride + w * cfg.dilation]
