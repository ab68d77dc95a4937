"""Layers met forward en analytische backprop."""

from .init import ConvSpec, DenseSpec, glorot_uniform, init_params, make_rng
from .layers import (
    Conv2dLayer,
    DenseLayer,
    FlattenLayer,
    GradientBundle,
    KernelTooLargeError,
    Layer,
    LayerCache,
    MaxPool2dLayer,
    StaleCacheError,
    backprop,
    conv2d_forward,
    dense_forward,
    flatten_forward,
    layer_forward,
    maxpool_forward,
)

__all__ = [
    "Conv2dLayer",
    "MaxPool2dLayer",
    "FlattenLayer",
    "DenseLayer",
    "Layer",
    "LayerCache",
    "GradientBundle",
    "KernelTooLargeError",
    "StaleCacheError",
    "conv2d_forward",
    "maxpool_forward",
    "flatten_forward",
    "dense_forward",
    "layer_forward",
    "backprop",
    "ConvSpec",
    "DenseSpec",
    "init_params",
    "glorot_uniform",
    "make_rng",
]
