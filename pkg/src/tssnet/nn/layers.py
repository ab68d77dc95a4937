"""
Layers voor TSSNet en de 1D CNN baseline, met exacte analytische gradiënten.

Alle layers accepteren een batch-as: conv en pooling werken op N×C×H×W,
dense op N×in. Een enkel sample (C×H×W of in) wordt automatisch als batch
van 1 behandeld. Forward geeft (output, cache) terug; backprop gebruikt die
cache. Er zit nergens een activatiefunctie in.
"""

import math
from dataclasses import dataclass, field
from functools import singledispatch
from typing import Literal, Optional

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..core import Tensor, matmul, reshape
from ..utils.errors import InvalidConfigError, ShapeMismatchError, TSSNetError

ConvPadding = Literal["valid", "same-zero"]


class KernelTooLargeError(TSSNetError):
    """Exception wanneer een kernel in valid mode niet in de input past."""

    def __init__(self, kernel: tuple[int, int], plane: tuple[int, int]):
        self.kernel = kernel
        self.plane = plane
        super().__init__(f"Kernel {kernel} past niet in het invoervlak {plane} (valid mode).")


class StaleCacheError(TSSNetError):
    """Exception wanneer een forward cache niet bij de gradiënt past."""

    pass


@dataclass(eq=False)
class Conv2dLayer:
    """
    2D cross-correlatie met per-kernel bias, stride 1.

    Attributes:
        weight: l × c_in × k_h × k_w kernels
        bias: l biases
        padding: "valid" of "same-zero"
    """

    weight: Tensor
    bias: Tensor
    padding: ConvPadding = "valid"

    def __post_init__(self):
        if self.weight.ndim != 4 or min(self.weight.shape) < 1:
            raise InvalidConfigError(f"Conv kernels moeten l×c×kh×kw zijn (kreeg {self.weight.shape}).")
        if self.bias.shape != (self.weight.shape[0],):
            raise ShapeMismatchError("Conv bias lengte", self.weight.shape[0], self.bias.shape)
        if self.padding not in ("valid", "same-zero"):
            raise InvalidConfigError(f"Onbekende conv padding '{self.padding}'.")

    @property
    def kernel_size(self) -> tuple[int, int]:
        return self.weight.shape[2], self.weight.shape[3]

    @property
    def in_channels(self) -> int:
        return self.weight.shape[1]

    @property
    def out_channels(self) -> int:
        return self.weight.shape[0]

    def output_plane(self, height: int, width: int) -> tuple[int, int]:
        kh, kw = self.kernel_size
        if self.padding == "same-zero":
            return height, width
        if kh > height or kw > width:
            raise KernelTooLargeError((kh, kw), (height, width))
        return height - kh + 1, width - kw + 1

    def params(self) -> dict[str, Tensor]:
        return {"weight": self.weight, "bias": self.bias}


@dataclass(eq=False)
class MaxPool2dLayer:
    """
    Max pooling; een pool groter dan het vlak wordt begrensd tot de werkelijke
    omvang en gedeeltelijke vensters aan het eind worden over hun werkelijke
    omvang gepoold.
    """

    pool_height: int = 2
    pool_width: int = 2
    stride_height: Optional[int] = None
    stride_width: Optional[int] = None

    def __post_init__(self):
        if self.pool_height < 1 or self.pool_width < 1:
            raise InvalidConfigError("Pool dimensies moeten >= 1 zijn.")
        if self.stride_height is None:
            self.stride_height = self.pool_height
        if self.stride_width is None:
            self.stride_width = self.pool_width

    def effective_pool(self, height: int, width: int) -> tuple[int, int]:
        return min(self.pool_height, height), min(self.pool_width, width)

    def output_plane(self, height: int, width: int) -> tuple[int, int]:
        ph, pw = self.effective_pool(height, width)
        out_h = math.ceil((height - ph) / self.stride_height) + 1
        out_w = math.ceil((width - pw) / self.stride_width) + 1
        return out_h, out_w

    def params(self) -> dict[str, Tensor]:
        return {}


@dataclass(eq=False)
class FlattenLayer:
    """Maak van N×C×H×W feature maps een N×(C·H·W) vector, row-major."""

    def params(self) -> dict[str, Tensor]:
        return {}


@dataclass(eq=False)
class DenseLayer:
    """
    Volledig verbonden laag: y = W·x + b, zonder activatie.

    Attributes:
        weight: out × in
        bias: out
    """

    weight: Tensor
    bias: Tensor

    def __post_init__(self):
        if self.weight.ndim != 2:
            raise InvalidConfigError(f"Dense weights moeten 2D zijn (kreeg {self.weight.shape}).")
        if self.bias.shape != (self.weight.shape[0],):
            raise ShapeMismatchError("Dense bias lengte", self.weight.shape[0], self.bias.shape)

    @property
    def in_features(self) -> int:
        return self.weight.shape[1]

    @property
    def out_features(self) -> int:
        return self.weight.shape[0]

    def params(self) -> dict[str, Tensor]:
        return {"weight": self.weight, "bias": self.bias}


Layer = Conv2dLayer | MaxPool2dLayer | FlattenLayer | DenseLayer


@dataclass(eq=False)
class LayerCache:
    """
    Alles wat backprop van een forward nodig heeft.

    Attributes:
        input_shape: Vorm van de (batch) input
        output_shape: Vorm van de (batch) output
        inputs: De (gepadde) input voor conv/dense
        argmax: Winnende platte index per pool-venster
        squeeze: Of de aanroeper een enkel sample zonder batch-as gaf
    """

    input_shape: tuple[int, ...]
    output_shape: tuple[int, ...]
    inputs: Optional[Tensor] = None
    argmax: Optional[np.ndarray] = None
    squeeze: bool = False


@dataclass(eq=False)
class GradientBundle:
    """Gradiënten naar de input en naar elke parameter van een layer."""

    grad_input: Optional[Tensor]
    grad_params: dict[str, Tensor] = field(default_factory=dict)


def _as_batch(x: Tensor, ndim: int, name: str) -> tuple[Tensor, bool]:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == ndim - 1:
        return x[None, ...], True
    if x.ndim != ndim:
        raise ShapeMismatchError(f"{name} input rang", f"{ndim - 1} of {ndim}", x.ndim)
    return x, False


def _same_pad(kernel: int) -> tuple[int, int]:
    # Oneven totale padding: het extra element komt aan de achterkant
    total = kernel - 1
    return total // 2, total - total // 2


def conv2d_forward(layer: Conv2dLayer, x: Tensor) -> tuple[Tensor, LayerCache]:
    """
    Cross-correlatie plus bias.

    Args:
        layer: De conv layer
        x: c_in×H×W of N×c_in×H×W

    Returns:
        (output l×H'×W' of N×l×H'×W', cache)

    Raises:
        ShapeMismatchError: Bij een verkeerd aantal kanalen
        KernelTooLargeError: Als de kernel in valid mode niet past
    """
    xb, squeeze = _as_batch(x, 4, "conv2d")
    if xb.shape[1] != layer.in_channels:
        raise ShapeMismatchError("conv2d input kanalen", layer.in_channels, xb.shape[1])
    height, width = xb.shape[2], xb.shape[3]
    layer.output_plane(height, width)
    kh, kw = layer.kernel_size
    if layer.padding == "same-zero":
        xb = np.pad(xb, ((0, 0), (0, 0), _same_pad(kh), _same_pad(kw)))
    windows = sliding_window_view(xb, (kh, kw), axis=(2, 3))
    out = np.einsum("nchwij,lcij->nlhw", windows, layer.weight, optimize=True)
    out += layer.bias[None, :, None, None]
    cache = LayerCache(
        input_shape=(xb.shape[0], layer.in_channels, height, width),
        output_shape=out.shape,
        inputs=xb,
        squeeze=squeeze,
    )
    return (out[0] if squeeze else out), cache


def maxpool_forward(layer: MaxPool2dLayer, x: Tensor) -> tuple[Tensor, LayerCache]:
    """
    Max per venster; de cache bewaart per venster de winnende platte index
    in het H×W vlak (bij gelijke waarden de laagste index).
    """
    xb, squeeze = _as_batch(x, 4, "maxpool")
    n, c, height, width = xb.shape
    ph, pw = layer.effective_pool(height, width)
    sh, sw = layer.stride_height, layer.stride_width
    out_h, out_w = layer.output_plane(height, width)

    # Vul aan met -inf zodat gedeeltelijke vensters volledig worden
    need_h = (out_h - 1) * sh + ph
    need_w = (out_w - 1) * sw + pw
    padded = np.pad(
        xb, ((0, 0), (0, 0), (0, need_h - height), (0, need_w - width)), constant_values=-np.inf
    )
    windows = sliding_window_view(padded, (ph, pw), axis=(2, 3))[:, :, ::sh, ::sw]
    flat = windows.reshape(n, c, out_h, out_w, ph * pw)
    local = np.argmax(flat, axis=-1)
    out = np.take_along_axis(flat, local[..., None], axis=-1)[..., 0]

    rows = np.arange(out_h)[:, None] * sh + local // pw
    cols = np.arange(out_w)[None, :] * sw + local % pw
    argmax = rows * width + cols
    cache = LayerCache(
        input_shape=xb.shape, output_shape=out.shape, argmax=argmax, squeeze=squeeze
    )
    return (out[0] if squeeze else out), cache


def flatten_forward(layer: FlattenLayer, x: Tensor) -> tuple[Tensor, LayerCache]:
    xb = np.asarray(x, dtype=np.float64)
    out = reshape(xb, (xb.shape[0], int(np.prod(xb.shape[1:]))))
    return out, LayerCache(input_shape=xb.shape, output_shape=out.shape)


def dense_forward(layer: DenseLayer, x: Tensor) -> tuple[Tensor, LayerCache]:
    """
    W·x + b voor een vector (in) of batch (N×in).

    Raises:
        ShapeMismatchError: Als de inputlengte niet gelijk is aan in
    """
    xb, squeeze = _as_batch(x, 2, "dense")
    if xb.shape[1] != layer.in_features:
        raise ShapeMismatchError("dense input lengte", layer.in_features, xb.shape[1])
    out = matmul(xb, layer.weight.T) + layer.bias[None, :]
    cache = LayerCache(input_shape=xb.shape, output_shape=out.shape, inputs=xb, squeeze=squeeze)
    return (out[0] if squeeze else out), cache


@singledispatch
def layer_forward(layer, x: Tensor) -> tuple[Tensor, LayerCache]:
    """Forward voor elk layer type."""
    raise TypeError(f"Geen forward voor layer type {type(layer).__name__}")


layer_forward.register(Conv2dLayer, conv2d_forward)
layer_forward.register(MaxPool2dLayer, maxpool_forward)
layer_forward.register(FlattenLayer, flatten_forward)
layer_forward.register(DenseLayer, dense_forward)


def _grad_as_batch(cache: LayerCache, grad_output: Tensor) -> Tensor:
    grad = np.asarray(grad_output, dtype=np.float64)
    if cache.squeeze and grad.ndim == len(cache.output_shape) - 1:
        grad = grad[None, ...]
    if grad.shape != tuple(cache.output_shape):
        raise ShapeMismatchError("grad_output vorm", tuple(cache.output_shape), grad.shape)
    return grad


def _unbatch(grad_input: Optional[Tensor], cache: LayerCache) -> Optional[Tensor]:
    if grad_input is None or not cache.squeeze:
        return grad_input
    return grad_input[0]


@singledispatch
def backprop(layer, cache: LayerCache, grad_output: Tensor, input_grad: bool = True) -> GradientBundle:
    """
    Analytische gradiënten van een layer.

    Args:
        layer: De layer uit de forward
        cache: Cache uit dezelfde forward aanroep
        grad_output: Gradiënt naar de output, zelfde vorm als de output
        input_grad: Zet op False om de inputgradiënt over te slaan

    Raises:
        ShapeMismatchError: Als grad_output niet de outputvorm heeft
        StaleCacheError: Als de cache niet bij deze layer hoort
    """
    raise TypeError(f"Geen backprop voor layer type {type(layer).__name__}")


@backprop.register
def _(layer: Conv2dLayer, cache: LayerCache, grad_output: Tensor, input_grad: bool = True) -> GradientBundle:
    grad = _grad_as_batch(cache, grad_output)
    if cache.inputs is None or cache.inputs.shape[1] != layer.in_channels:
        raise StaleCacheError("Conv cache past niet bij de layer.")
    kh, kw = layer.kernel_size
    windows = sliding_window_view(cache.inputs, (kh, kw), axis=(2, 3))
    if windows.shape[2:4] != grad.shape[2:4]:
        raise StaleCacheError("Conv cache vorm past niet bij grad_output.")

    grad_weight = np.einsum("nchwij,nlhw->lcij", windows, grad, optimize=True)
    grad_bias = grad.sum(axis=(0, 2, 3))

    grad_input = None
    if input_grad:
        # Adjoint van cross-correlatie: volledige correlatie met de gespiegelde kernel
        padded_grad = np.pad(grad, ((0, 0), (0, 0), (kh - 1, kh - 1), (kw - 1, kw - 1)))
        grad_windows = sliding_window_view(padded_grad, (kh, kw), axis=(2, 3))
        flipped = layer.weight[:, :, ::-1, ::-1]
        grad_padded = np.einsum("nlhwij,lcij->nchw", grad_windows, flipped, optimize=True)
        _, _, height, width = cache.input_shape
        if layer.padding == "same-zero":
            top, _ = _same_pad(kh)
            left, _ = _same_pad(kw)
            grad_input = grad_padded[:, :, top:top + height, left:left + width]
        else:
            grad_input = grad_padded
        grad_input = np.ascontiguousarray(grad_input)

    return GradientBundle(
        grad_input=_unbatch(grad_input, cache),
        grad_params={"weight": grad_weight, "bias": grad_bias},
    )


@backprop.register
def _(layer: MaxPool2dLayer, cache: LayerCache, grad_output: Tensor, input_grad: bool = True) -> GradientBundle:
    grad = _grad_as_batch(cache, grad_output)
    if cache.argmax is None or cache.argmax.shape != grad.shape:
        raise StaleCacheError("Pool cache bevat geen passend argmax record.")
    if not input_grad:
        return GradientBundle(grad_input=None)
    n, c, height, width = cache.input_shape
    grad_input = np.zeros((n, c, height * width))
    n_idx = np.arange(n)[:, None, None, None]
    c_idx = np.arange(c)[None, :, None, None]
    # add.at: bij overlappende vensters kan één positie meerdere keren winnen
    np.add.at(grad_input, (n_idx, c_idx, cache.argmax), grad)
    grad_input = grad_input.reshape(n, c, height, width)
    return GradientBundle(grad_input=_unbatch(grad_input, cache))


@backprop.register
def _(layer: FlattenLayer, cache: LayerCache, grad_output: Tensor, input_grad: bool = True) -> GradientBundle:
    grad = _grad_as_batch(cache, grad_output)
    if not input_grad:
        return GradientBundle(grad_input=None)
    return GradientBundle(grad_input=reshape(grad, cache.input_shape))


@backprop.register
def _(layer: DenseLayer, cache: LayerCache, grad_output: Tensor, input_grad: bool = True) -> GradientBundle:
    grad = _grad_as_batch(cache, grad_output)
    if cache.inputs is None or cache.inputs.shape[1] != layer.in_features:
        raise StaleCacheError("Dense cache past niet bij de layer.")
    grad_weight = matmul(grad.T, cache.inputs)
    grad_bias = grad.sum(axis=0)
    grad_input = matmul(grad, layer.weight) if input_grad else None
    return GradientBundle(
        grad_input=_unbatch(grad_input, cache),
        grad_params={"weight": grad_weight, "bias": grad_bias},
    )
