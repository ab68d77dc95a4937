"""Tests voor de 1D CNN baseline en persistence."""

import numpy as np
import pytest

from src.tssnet.data import SeriesMatrix
from src.tssnet.models import PersistenceForecaster, build_cnn1d, build_from_arch, persistence_predict
from src.tssnet.training import grad_check
from src.tssnet.utils.errors import InvalidConfigError


def test_cnn1d_reference_shapes(rng):
    model = build_cnn1d(10, 168, 15)
    assert model.out.weight.shape[0] == 150
    yhat, _ = model.forward(rng.standard_normal((10, 168)))
    assert yhat.shape == (10, 15)


def test_cnn1d_same_seed_identical(rng):
    x = rng.standard_normal((4, 3, 20))
    a = build_cnn1d(3, 20, 2, seed=11).predict(x)
    b = build_cnn1d(3, 20, 2, seed=11).predict(x)
    np.testing.assert_array_equal(a, b)


def test_cnn1d_invalid_kernel():
    with pytest.raises(InvalidConfigError):
        build_cnn1d(3, 20, 2, kernel_height=4)
    with pytest.raises(InvalidConfigError):
        build_cnn1d(3, 20, 2, kernel_width=21)


def test_cnn1d_feature_maps_have_height_one(rng):
    model = build_cnn1d(3, 20, 2, kernel_width=3)
    _, maps = model.forward(rng.standard_normal((3, 20)), capture=True)
    assert maps.n_kernels == 3
    assert maps.plane == (1, 18)


def test_cnn1d_gradients(rng):
    model = build_cnn1d(2, 10, 2, seed=4)
    report = grad_check(model, rng.standard_normal((2, 10)), rng.standard_normal((2, 2)))
    assert report.max_rel_err < 1e-4


def test_cnn1d_rebuild_from_arch(rng):
    model = build_cnn1d(2, 10, 3, kernel_height=1, seed=2)
    x = rng.standard_normal((2, 10))
    np.testing.assert_array_equal(build_from_arch(model.arch).forward(x)[0], model.forward(x)[0])


def test_persistence_last_value():
    out = persistence_predict(SeriesMatrix([[1, 2, 3], [4, 5, 6]]), 2)
    np.testing.assert_array_equal(out, [[3, 3], [6, 6]])


def test_persistence_seasonal():
    out = persistence_predict(SeriesMatrix([[1, 2, 3, 4]]), 3, mode="seasonal", period=2)
    np.testing.assert_array_equal(out, [[3, 4, 3]])


def test_persistence_seasonal_too_short():
    with pytest.raises(InvalidConfigError):
        persistence_predict(SeriesMatrix([[1, 2]]), 2, mode="seasonal", period=3)


def test_persistence_unknown_mode():
    with pytest.raises(InvalidConfigError):
        persistence_predict(SeriesMatrix([[1, 2]]), 2, mode="mean")


def test_persistence_forecaster_batches():
    inputs = np.arange(24.0).reshape(2, 3, 4)
    forecaster = PersistenceForecaster(3, 4, 2)
    out = forecaster.predict(inputs)
    assert out.shape == (2, 3, 2)
    np.testing.assert_array_equal(out[1, 2], [23.0, 23.0])


def test_persistence_forecaster_validates_period():
    with pytest.raises(InvalidConfigError):
        PersistenceForecaster(1, 4, 2, mode="seasonal", period=6)
