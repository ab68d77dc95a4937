"""Tests voor TSSNet: vormen, feature maps en end-to-end gradiënten."""

import numpy as np
import pytest

from src.tssnet.models import build_from_arch, build_tssnet, capture_feature_maps
from src.tssnet.training import grad_check
from src.tssnet.transform import TemporalTensorConfig
from src.tssnet.utils.errors import InvalidConfigError, ShapeMismatchError


def test_smallest_tssnet_builds(rng):
    model = build_tssnet(1, 8, 1, TemporalTensorConfig(window=2, stride=1), k=1)
    assert model.slices == 6
    yhat, _ = model.forward(rng.standard_normal((1, 8)))
    assert yhat.shape == (1, 1)


def test_reference_shapes(rng):
    model = build_tssnet(10, 168, 15, TemporalTensorConfig(window=8, stride=2), k=3)
    assert model.slices == 77
    assert model.out.weight.shape[0] == 150
    yhat, _ = model.forward(rng.standard_normal((10, 168)))
    assert yhat.shape == (10, 15)


def test_kernel_wider_than_window():
    with pytest.raises(InvalidConfigError):
        build_tssnet(2, 20, 2, TemporalTensorConfig(window=3, stride=1), k=4)


def test_fc1_wider_than_output():
    model = build_tssnet(3, 20, 2, TemporalTensorConfig(window=3, stride=1))
    assert model.fc1.weight.shape[0] > model.out.weight.shape[0]
    # Multiplier 1 geeft fc1 even breed als de m·h outputs
    with pytest.raises(InvalidConfigError):
        build_tssnet(3, 20, 2, TemporalTensorConfig(window=3, stride=1), hidden_multiplier=1)


def test_unknown_kernel_mode():
    with pytest.raises(InvalidConfigError):
        build_tssnet(2, 20, 2, TemporalTensorConfig(window=3, stride=1), kernel_height_mode="tall")


def test_wrong_input_shape(rng):
    model = build_tssnet(2, 20, 2, TemporalTensorConfig(window=3, stride=1), k=2)
    with pytest.raises(ShapeMismatchError):
        model.forward(rng.standard_normal((3, 20)))
    with pytest.raises(ShapeMismatchError):
        model.forward(rng.standard_normal((2, 19)))


def test_full_stack_conv1_has_height_one(rng):
    cfg = TemporalTensorConfig(window=4, stride=2)
    model = build_tssnet(3, 30, 2, cfg, k=2)
    _, _, first_conv = model.forward_cached(rng.standard_normal((5, 3, 30)))
    assert first_conv.shape == (5, 3, 1, 3)
    maps = capture_feature_maps(model, rng.standard_normal((3, 30)))
    assert maps.n_kernels == 3
    assert maps.plane == (3, 1)


def test_fixed_mode_maps_are_window_by_slices(rng):
    cfg = TemporalTensorConfig(window=6, stride=2)
    model = build_tssnet(1, 40, 4, cfg, k=3, kernel_height_mode="fixed(3)")
    maps = capture_feature_maps(model, rng.standard_normal((1, 40)))
    assert maps.plane == (6, model.slices)
    assert maps.kernel(0).shape == (6, model.slices)


def test_zero_weights_give_constant_output(rng):
    model = build_tssnet(2, 20, 3, TemporalTensorConfig(window=3, stride=1), k=2)
    params = {name: np.zeros_like(value) for name, value in model.parameters().items()}
    params["out.bias"] = np.full(6, 0.75)
    model.set_parameters(params)
    yhat = model.predict(rng.standard_normal((4, 2, 20)))
    np.testing.assert_array_equal(yhat, np.full((4, 2, 3), 0.75))


def test_forward_is_deterministic(rng):
    cfg = TemporalTensorConfig(window=4, stride=1)
    a = build_tssnet(2, 24, 3, cfg, k=2, seed=5)
    b = build_tssnet(2, 24, 3, cfg, k=2, seed=5)
    x = rng.standard_normal((2, 24))
    np.testing.assert_array_equal(a.forward(x)[0], b.forward(x)[0])
    np.testing.assert_array_equal(a.forward(x)[0], a.forward(x)[0])
    c = build_tssnet(2, 24, 3, cfg, k=2, seed=6)
    assert not np.array_equal(a.forward(x)[0], c.forward(x)[0])


def test_batch_and_predict_agree(rng):
    model = build_tssnet(2, 24, 3, TemporalTensorConfig(window=4, stride=2), k=2)
    batch = rng.standard_normal((7, 2, 24))
    whole = model.predict(batch, batch_size=3)
    for i in range(7):
        np.testing.assert_allclose(whole[i], model.forward(batch[i])[0], atol=1e-12)


def test_rebuild_from_arch(rng):
    model = build_tssnet(2, 24, 3, TemporalTensorConfig(window=4, stride=2), k=2,
                         kernel_height_mode="fixed(2)", seed=9)
    rebuilt = build_from_arch(model.arch)
    assert rebuilt.kernel_height_mode == "fixed"
    x = rng.standard_normal((2, 24))
    np.testing.assert_array_equal(rebuilt.forward(x)[0], model.forward(x)[0])


@pytest.mark.parametrize("mode", ["full-stack", "fixed(3)"])
def test_end_to_end_gradients(mode, rng):
    cfg = TemporalTensorConfig(window=3, stride=1)
    model = build_tssnet(2, 12, 2, cfg, k=2, kernel_height_mode=mode, seed=3)
    # Continue input zonder ties in de max-pooling
    x = rng.standard_normal((2, 12))
    y = rng.standard_normal((2, 2))
    report = grad_check(model, x, y)
    assert report.max_rel_err < 1e-4
    assert {p.name for p in report.per_parameter} == set(model.parameters())
    # Alle parameters zijn gecontroleerd (klein model)
    assert all(p.checked == p.size for p in report.per_parameter)
