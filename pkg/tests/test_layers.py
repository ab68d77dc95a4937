"""Tests voor de layers, hun gradiënten en de initialisatie."""

import numpy as np
import pytest

from src.tssnet.nn import (
    Conv2dLayer,
    ConvSpec,
    DenseLayer,
    DenseSpec,
    FlattenLayer,
    KernelTooLargeError,
    MaxPool2dLayer,
    StaleCacheError,
    backprop,
    init_params,
    layer_forward,
)
from src.tssnet.utils.errors import ShapeMismatchError


def numeric_grad(f, array: np.ndarray, eps: float = 1e-5) -> np.ndarray:
    """Centrale differenties van een scalaire functie naar elke entry van array (in-place verstoord)."""
    grad = np.zeros_like(array)
    flat = array.reshape(-1)
    out = grad.reshape(-1)
    for i in range(flat.size):
        original = flat[i]
        flat[i] = original + eps
        plus = f()
        flat[i] = original - eps
        minus = f()
        flat[i] = original
        out[i] = (plus - minus) / (2 * eps)
    return grad


def max_rel_err(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b) / np.maximum(1.0, np.abs(a) + np.abs(b))))


def check_layer_gradients(layer, x: np.ndarray, rng) -> None:
    out, cache = layer_forward(layer, x)
    weights = rng.standard_normal(out.shape)
    bundle = backprop(layer, cache, weights)

    def loss():
        return float((layer_forward(layer, x)[0] * weights).sum())

    assert max_rel_err(bundle.grad_input, numeric_grad(loss, x)) < 1e-4
    for name, value in layer.params().items():
        assert max_rel_err(bundle.grad_params[name], numeric_grad(loss, value)) < 1e-4


# ----------------------------------------------------------------------
# Forward
# ----------------------------------------------------------------------
def test_conv_all_ones():
    layer = Conv2dLayer(np.ones((1, 1, 2, 2)), np.zeros(1), "valid")
    out, _ = layer_forward(layer, np.ones((1, 3, 3)))
    np.testing.assert_array_equal(out, np.full((1, 2, 2), 4.0))


def test_conv_identity_and_bias_only(rng):
    x = rng.standard_normal((1, 4, 5))
    identity = Conv2dLayer(np.ones((1, 1, 1, 1)), np.zeros(1))
    np.testing.assert_array_equal(layer_forward(identity, x)[0], x)
    bias_only = Conv2dLayer(np.zeros((1, 1, 2, 2)), np.array([3.0]))
    np.testing.assert_array_equal(layer_forward(bias_only, x)[0], np.full((1, 3, 4), 3.0))


def test_conv_same_zero_preserves_shape(rng):
    x = rng.standard_normal((2, 5, 7))
    for kh, kw in [(1, 1), (2, 3), (3, 3), (4, 2), (5, 7)]:
        layer = Conv2dLayer(rng.standard_normal((3, 2, kh, kw)), np.zeros(3), "same-zero")
        assert layer_forward(layer, x)[0].shape == (3, 5, 7)


def test_conv_kernel_too_large():
    layer = Conv2dLayer(np.ones((1, 1, 4, 2)), np.zeros(1), "valid")
    with pytest.raises(KernelTooLargeError):
        layer_forward(layer, np.ones((1, 3, 3)))


def test_conv_channel_mismatch():
    layer = Conv2dLayer(np.ones((1, 2, 1, 1)), np.zeros(1))
    with pytest.raises(ShapeMismatchError):
        layer_forward(layer, np.ones((3, 2, 2)))


def test_maxpool_examples():
    pool = MaxPool2dLayer(2, 2)
    out, _ = layer_forward(pool, np.array([[[1.0, 2.0], [3.0, 4.0]]]))
    np.testing.assert_array_equal(out, [[[4.0]]])
    assert layer_forward(pool, np.zeros((1, 4, 4)))[0].shape == (1, 2, 2)


def test_maxpool_degenerate_extent():
    # Hoogte 1: pool over de werkelijke omvang (1×2), oneven breedte wordt naar boven afgerond
    pool = MaxPool2dLayer(2, 2)
    out, _ = layer_forward(pool, np.array([[[1.0, 5.0, 2.0, 0.0, 7.0]]]))
    np.testing.assert_array_equal(out, [[[5.0, 2.0, 7.0]]])


def test_maxpool_tie_routes_to_first_index():
    pool = MaxPool2dLayer(2, 2)
    out, cache = layer_forward(pool, np.ones((1, 2, 2)))
    grad = backprop(pool, cache, np.ones_like(out)).grad_input
    np.testing.assert_array_equal(grad, [[[1.0, 0.0], [0.0, 0.0]]])


def test_maxpool_gradient_on_increasing_input():
    x = np.arange(16.0).reshape(1, 4, 4)
    pool = MaxPool2dLayer(2, 2)
    out, cache = layer_forward(pool, x)
    grad_out = np.array([[[1.0, 2.0], [3.0, 4.0]]])
    grad = backprop(pool, cache, grad_out).grad_input
    expected = np.zeros((1, 4, 4))
    expected[0, 1, 1], expected[0, 1, 3], expected[0, 3, 1], expected[0, 3, 3] = 1.0, 2.0, 3.0, 4.0
    np.testing.assert_array_equal(grad, expected)
    assert grad.sum() == grad_out.sum()


def test_dense_examples():
    x = np.array([1.0, 1.0])
    identity = DenseLayer(np.eye(2), np.zeros(2))
    np.testing.assert_array_equal(layer_forward(identity, x)[0], x)
    layer = DenseLayer(np.array([[1.0, 2.0], [3.0, 4.0]]), np.array([1.0, 1.0]))
    np.testing.assert_array_equal(layer_forward(layer, x)[0], [4.0, 8.0])
    zero = DenseLayer(np.zeros((1, 2)), np.array([5.0]))
    np.testing.assert_array_equal(layer_forward(zero, x)[0], [5.0])


def test_dense_identity_adjoint(rng):
    layer = DenseLayer(np.eye(3), np.zeros(3))
    _, cache = layer_forward(layer, rng.standard_normal(3))
    g = rng.standard_normal(3)
    np.testing.assert_array_equal(backprop(layer, cache, g).grad_input, g)


def test_flatten_row_major(rng):
    x = rng.standard_normal((2, 3, 2, 2))
    out, cache = layer_forward(FlattenLayer(), x)
    np.testing.assert_array_equal(out, x.reshape(2, 12))
    back = backprop(FlattenLayer(), cache, out).grad_input
    np.testing.assert_array_equal(back, x)


def test_linearity(rng):
    conv = Conv2dLayer(rng.standard_normal((2, 2, 2, 3)), rng.standard_normal(2), "same-zero")
    dense = DenseLayer(rng.standard_normal((4, 5)), rng.standard_normal(4))
    for layer, shape in [(conv, (2, 4, 5)), (dense, (5,))]:
        x, y = rng.standard_normal(shape), rng.standard_normal(shape)
        f = lambda v: layer_forward(layer, v)[0]  # noqa: E731
        np.testing.assert_allclose(f(x + y), f(x) + f(y) - f(np.zeros(shape)), atol=1e-9)


def test_batch_matches_single_samples(rng):
    conv = Conv2dLayer(rng.standard_normal((2, 1, 2, 2)), rng.standard_normal(2))
    batch = rng.standard_normal((3, 1, 4, 4))
    out, _ = layer_forward(conv, batch)
    for i in range(3):
        np.testing.assert_allclose(out[i], layer_forward(conv, batch[i])[0], atol=1e-12)


# ----------------------------------------------------------------------
# Gradiënten tegen centrale differenties
# ----------------------------------------------------------------------
@pytest.mark.parametrize("padding", ["valid", "same-zero"])
def test_conv_gradients(padding, rng):
    for _ in range(5):
        c_in, c_out = rng.integers(1, 4, size=2)
        height, width = rng.integers(3, 7, size=2)
        kh, kw = int(rng.integers(1, height + 1)), int(rng.integers(1, width + 1))
        layer = Conv2dLayer(rng.standard_normal((c_out, c_in, kh, kw)), rng.standard_normal(c_out), padding)
        check_layer_gradients(layer, rng.standard_normal((c_in, height, width)), rng)


def test_dense_gradients(rng):
    for _ in range(5):
        n_in, n_out = rng.integers(1, 7, size=2)
        layer = DenseLayer(rng.standard_normal((n_out, n_in)), rng.standard_normal(n_out))
        check_layer_gradients(layer, rng.standard_normal(n_in), rng)


def test_maxpool_gradients(rng):
    # Verschillende waarden: geen ties, dus max is lokaal differentieerbaar
    for shape in [(1, 4, 4), (2, 5, 3), (1, 1, 6), (3, 3, 3)]:
        x = rng.permutation(int(np.prod(shape))).reshape(shape).astype(np.float64)
        check_layer_gradients(MaxPool2dLayer(2, 2), x, rng)


def test_stale_cache_detected(rng):
    small = DenseLayer(rng.standard_normal((2, 3)), np.zeros(2))
    big = DenseLayer(rng.standard_normal((2, 4)), np.zeros(2))
    _, cache = layer_forward(small, rng.standard_normal(3))
    with pytest.raises(StaleCacheError):
        backprop(big, cache, np.ones(2))


def test_grad_output_shape_checked(rng):
    layer = DenseLayer(rng.standard_normal((2, 3)), np.zeros(2))
    _, cache = layer_forward(layer, rng.standard_normal(3))
    with pytest.raises(ShapeMismatchError):
        backprop(layer, cache, np.ones(5))


# ----------------------------------------------------------------------
# Initialisatie
# ----------------------------------------------------------------------
def test_init_deterministic_and_zero_bias():
    spec = ConvSpec(3, 2, 2, 3, "valid")
    a, b = init_params(spec, 7), init_params(spec, 7)
    np.testing.assert_array_equal(a.weight, b.weight)
    np.testing.assert_array_equal(a.bias, np.zeros(3))
    dense = init_params(DenseSpec(10, 4), 7)
    assert dense.weight.shape == (4, 10)
    np.testing.assert_array_equal(dense.bias, np.zeros(4))


def test_init_glorot_uniform_statistics():
    spec = DenseSpec(40, 25)
    weight = init_params(spec, 3).weight
    assert weight.size == 1000
    limit = np.sqrt(6.0 / (40 + 25))
    assert np.all(np.abs(weight) <= limit)
    stderr = limit / np.sqrt(3.0) / np.sqrt(weight.size)
    assert abs(weight.mean()) < 3 * stderr
