"""Tests voor de loss, clipping en de optimizers."""

import numpy as np
import pytest

from src.tssnet.optim import (
    AdamState,
    adam_step,
    batch_frobenius_loss,
    clip_gradients,
    frobenius_loss,
    global_norm,
    sgd_step,
)
from src.tssnet.utils.errors import EmptyInputError, InvalidConfigError, ShapeMismatchError


def test_loss_zero_for_perfect_prediction():
    y = np.array([[1.0, -2.0], [0.5, 3.0]])
    loss, grad = frobenius_loss(y, y.copy())
    assert loss == 0.0
    np.testing.assert_array_equal(grad, np.zeros_like(y))


def test_loss_hand_example():
    loss, grad = frobenius_loss(np.array([[1.0, 2.0]]), np.array([[0.0, 0.0]]))
    assert loss == 5.0
    np.testing.assert_array_equal(grad, [[-2.0, -4.0]])


def test_loss_gradient_matches_finite_differences(rng):
    y = rng.standard_normal((3, 4))
    yhat = rng.standard_normal((3, 4))
    _, grad = frobenius_loss(y, yhat)
    eps = 1e-6
    numeric = np.zeros_like(yhat)
    for index in np.ndindex(yhat.shape):
        plus, minus = yhat.copy(), yhat.copy()
        plus[index] += eps
        minus[index] -= eps
        numeric[index] = (frobenius_loss(y, plus)[0] - frobenius_loss(y, minus)[0]) / (2 * eps)
    rel = np.abs(grad - numeric) / np.maximum(1.0, np.abs(grad) + np.abs(numeric))
    assert rel.max() < 1e-6


def test_batch_loss_is_mean(rng):
    y = rng.standard_normal((4, 2, 3))
    yhat = rng.standard_normal((4, 2, 3))
    loss, grad = batch_frobenius_loss(y, yhat)
    per_sample = [frobenius_loss(y[i], yhat[i])[0] for i in range(4)]
    assert loss == pytest.approx(np.mean(per_sample), abs=1e-12)
    np.testing.assert_allclose(grad, 2 * (yhat - y) / 4)


def test_loss_errors():
    with pytest.raises(ShapeMismatchError):
        frobenius_loss(np.zeros((2, 2)), np.zeros((2, 3)))
    with pytest.raises(EmptyInputError):
        batch_frobenius_loss(np.zeros((0, 2, 2)), np.zeros((0, 2, 2)))


def test_clip_examples():
    small = {"a": np.array([0.0, 4.0])}
    np.testing.assert_array_equal(clip_gradients(small, 10.0)["a"], [0.0, 4.0])
    big = {"a": np.array([20.0])}
    np.testing.assert_array_equal(clip_gradients(big, 10.0)["a"], [10.0])
    zeros = {"a": np.zeros(3), "b": np.zeros((2, 2))}
    clipped = clip_gradients(zeros, 10.0)
    assert all(not v.any() for v in clipped.values())


def test_clip_global_norm_over_all_tensors(rng):
    grads = {"w": rng.standard_normal((5, 5)) * 10, "b": rng.standard_normal(5) * 10}
    clipped = clip_gradients(grads, 1e-6)
    assert global_norm(clipped) <= 1e-6 + 1e-12
    # Richting blijft behouden
    ratio = clipped["w"] / grads["w"]
    np.testing.assert_allclose(ratio, ratio.flat[0])


def test_clip_invalid_threshold():
    with pytest.raises(InvalidConfigError):
        clip_gradients({"a": np.ones(2)}, 0.0)


def test_sgd_examples():
    out = sgd_step({"p": np.array([1.0])}, {"p": np.array([2.0])}, 0.1)
    assert out["p"][0] == pytest.approx(0.8, abs=1e-15)
    with pytest.raises(InvalidConfigError):
        sgd_step({"p": np.ones(1)}, {"p": np.ones(1)}, 0.0)
    with pytest.raises(ShapeMismatchError):
        sgd_step({"p": np.ones(2)}, {"p": np.ones(3)}, 0.1)


def test_sgd_linear_in_steps():
    params = {"p": np.array([0.5, -1.0])}
    grads = {"p": np.array([0.25, 1.5])}
    twice = sgd_step(sgd_step(params, grads, 0.1), grads, 0.1)
    once = sgd_step(params, {"p": 2 * grads["p"]}, 0.1)
    np.testing.assert_allclose(twice["p"], once["p"], atol=1e-15)


def test_adam_zero_gradient_keeps_parameters():
    params = {"p": np.array([1.0, -2.0])}
    new, state = adam_step(params, {"p": np.zeros(2)}, AdamState(), 0.01)
    np.testing.assert_array_equal(new["p"], params["p"])
    assert state.t == 1


def test_adam_first_step_magnitude():
    new, _ = adam_step({"p": np.array([0.0])}, {"p": np.array([1.0])}, AdamState(), 0.01)
    assert new["p"][0] == pytest.approx(-0.01, rel=1e-6)


def test_adam_first_step_sign(rng):
    grads = {"p": rng.standard_normal(20)}
    grads["p"][grads["p"] == 0] = 1.0
    new, _ = adam_step({"p": np.zeros(20)}, grads, AdamState(), 0.001)
    np.testing.assert_array_equal(np.sign(new["p"]), -np.sign(grads["p"]))


def test_adam_does_not_mutate_inputs():
    params = {"p": np.array([1.0])}
    state = AdamState.for_params(params)
    adam_step(params, {"p": np.array([1.0])}, state, 0.01)
    assert params["p"][0] == 1.0
    assert state.t == 0
    assert state.m["p"][0] == 0.0
