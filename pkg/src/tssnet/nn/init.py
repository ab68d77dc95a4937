"""Glorot-uniform initialisatie van conv en dense layers."""

import math
from dataclasses import dataclass
from functools import singledispatch

import numpy as np

from ..utils.errors import InvalidConfigError
from .layers import Conv2dLayer, ConvPadding, DenseLayer

SeedLike = int | np.random.Generator


@dataclass(frozen=True)
class ConvSpec:
    """Bouwvoorschrift voor een Conv2dLayer."""

    out_channels: int
    in_channels: int
    kernel_height: int
    kernel_width: int
    padding: ConvPadding = "valid"

    @property
    def fans(self) -> tuple[int, int]:
        area = self.kernel_height * self.kernel_width
        return self.in_channels * area, self.out_channels * area


@dataclass(frozen=True)
class DenseSpec:
    """Bouwvoorschrift voor een DenseLayer."""

    in_features: int
    out_features: int

    @property
    def fans(self) -> tuple[int, int]:
        return self.in_features, self.out_features


def make_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def glorot_uniform(shape: tuple[int, ...], fan_in: int, fan_out: int, rng: np.random.Generator) -> np.ndarray:
    """Trek uit uniform(-a, a) met a = sqrt(6 / (fan_in + fan_out))."""
    limit = math.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=shape)


@singledispatch
def init_params(spec, seed: SeedLike):
    """
    Maak een geïnitialiseerde layer uit een spec.

    Args:
        spec: ConvSpec of DenseSpec
        seed: Integer seed of een bestaande Generator (deelt dan de stroom)

    Returns:
        Layer met Glorot-uniform gewichten en biases exact 0
    """
    raise TypeError(f"Geen initialisatie voor {type(spec).__name__}")


@init_params.register
def _(spec: ConvSpec, seed: SeedLike) -> Conv2dLayer:
    dims = (spec.out_channels, spec.in_channels, spec.kernel_height, spec.kernel_width)
    if min(dims) < 1:
        raise InvalidConfigError(f"Ongeldige conv spec {dims}.")
    fan_in, fan_out = spec.fans
    weight = glorot_uniform(dims, fan_in, fan_out, make_rng(seed))
    return Conv2dLayer(weight=weight, bias=np.zeros(spec.out_channels), padding=spec.padding)


@init_params.register
def _(spec: DenseSpec, seed: SeedLike) -> DenseLayer:
    if spec.in_features < 1 or spec.out_features < 1:
        raise InvalidConfigError(f"Ongeldige dense spec {spec.in_features}->{spec.out_features}.")
    fan_in, fan_out = spec.fans
    weight = glorot_uniform((spec.out_features, spec.in_features), fan_in, fan_out, make_rng(seed))
    return DenseLayer(weight=weight, bias=np.zeros(spec.out_features))
