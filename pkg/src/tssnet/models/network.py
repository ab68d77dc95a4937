"""
Gedeelde netwerkbasis: een lineaire stapel layers met forward, backward en
parameterbeheer. TssNetModel en Cnn1dBaseline verschillen alleen in hun
layers en in hoe de ruwe m×T input naar een beeld wordt omgezet.
"""

import copy
from dataclasses import dataclass
from typing import Optional

import numpy as np

from config import settings
from ..core import Tensor
from ..data.series import SeriesMatrix
from ..nn import Conv2dLayer, Layer, LayerCache, backprop, layer_forward
from ..optim import batch_frobenius_loss
from ..utils.errors import ShapeMismatchError


@dataclass(eq=False)
class FeatureMaps:
    """
    Activaties na de eerste convolutie.

    Attributes:
        maps: l×H×W (één sample) of N×l×H×W
        layer: Naam van de layer waarna is gecaptured
    """

    maps: Tensor
    layer: str = "conv1"

    @property
    def n_kernels(self) -> int:
        return self.maps.shape[-3]

    @property
    def plane(self) -> tuple[int, int]:
        return self.maps.shape[-2], self.maps.shape[-1]

    def kernel(self, index: int) -> Tensor:
        return self.maps[..., index, :, :]


class LayerStack:
    """
    Basisklasse voor feed-forward modellen op m×T inputs.

    Subklassen zetten self.layers (geordende (naam, layer) paren) en
    implementeren adapt_input en capture_transform.
    """

    kind = "stack"

    def __init__(self, layers: list[tuple[str, Layer]], n_features: int, input_length: int, horizon: int, arch: dict):
        self.layers = list(layers)
        self.n_features = n_features
        self.input_length = input_length
        self.horizon = horizon
        self.arch = dict(arch)

    # ------------------------------------------------------------------
    # Input handling
    # ------------------------------------------------------------------
    def adapt_input(self, x: Tensor) -> Tensor:
        """Zet een N×m×T batch om naar het N×C×H×W beeld van de eerste conv."""
        raise NotImplementedError

    def capture_transform(self, maps: Tensor) -> Tensor:
        """Zet ruwe conv1 activaties om naar de gerapporteerde oriëntatie."""
        return maps

    def _as_batch(self, x) -> tuple[Tensor, bool]:
        values = x.values if isinstance(x, SeriesMatrix) else np.asarray(x, dtype=np.float64)
        squeeze = values.ndim == 2
        if squeeze:
            values = values[None, ...]
        expected = (self.n_features, self.input_length)
        if values.ndim != 3 or values.shape[1:] != expected:
            raise ShapeMismatchError("Model input (m×T)", expected, values.shape[-2:] if values.ndim >= 2 else values.shape)
        return values, squeeze

    # ------------------------------------------------------------------
    # Forward / backward
    # ------------------------------------------------------------------
    def forward_cached(self, x) -> tuple[Tensor, list[LayerCache], Optional[Tensor]]:
        """
        Forward op een batch met caches voor backprop.

        Returns:
            (ŷ als N×m×h, caches per layer, ruwe conv1 output)
        """
        batch, _ = self._as_batch(x)
        out = self.adapt_input(batch)
        caches = []
        first_conv = None
        for name, layer in self.layers:
            out, cache = layer_forward(layer, out)
            caches.append(cache)
            if first_conv is None and isinstance(layer, Conv2dLayer):
                first_conv = out
        yhat = out.reshape(batch.shape[0], self.n_features, self.horizon)
        return yhat, caches, first_conv

    def forward(self, x, capture: bool = False) -> tuple[Tensor, Optional[FeatureMaps]]:
        """
        Voorspel ŷ voor één m×T input of een N×m×T batch.

        Args:
            x: SeriesMatrix, m×T of N×m×T array
            capture: Geef ook de activaties na conv1 terug

        Returns:
            (ŷ met vorm m×h of N×m×h, FeatureMaps of None)

        Raises:
            ShapeMismatchError: Als m of T niet klopt
        """
        _, squeeze = self._as_batch(x)
        yhat, _, first_conv = self.forward_cached(x)
        maps = None
        if capture:
            raw = self.capture_transform(first_conv)
            maps = FeatureMaps(raw[0] if squeeze else raw)
        return (yhat[0] if squeeze else yhat), maps

    def backward(self, caches: list[LayerCache], grad_yhat: Tensor) -> dict[str, Tensor]:
        """Gradiënten van alle parameters gegeven dL/dŷ (N×m×h)."""
        grad = grad_yhat.reshape(grad_yhat.shape[0], -1)
        grads: dict[str, Tensor] = {}
        for index in range(len(self.layers) - 1, -1, -1):
            name, layer = self.layers[index]
            bundle = backprop(layer, caches[index], grad, input_grad=index > 0)
            for pname, value in bundle.grad_params.items():
                grads[f"{name}.{pname}"] = value
            grad = bundle.grad_input
        return {name: grads[name] for name in self.parameters()}

    def loss_and_gradients(self, x: Tensor, y: Tensor) -> tuple[float, dict[str, Tensor]]:
        """Batch-gemiddelde Frobenius loss en de bijbehorende gradiënten."""
        batch, _ = self._as_batch(x)
        yhat, caches, _ = self.forward_cached(batch)
        y = np.asarray(y, dtype=np.float64).reshape(yhat.shape)
        loss, grad = batch_frobenius_loss(y, yhat)
        return loss, self.backward(caches, grad)

    def predict(self, inputs: Tensor, batch_size: int = settings.EVAL_BATCH_SIZE) -> Tensor:
        """
        Voorspellingen voor N×m×T inputs, in vaste batches.

        De vaste batchgrootte houdt de uitkomst bit-gelijk, ongeacht wie
        predict aanroept.
        """
        batch, _ = self._as_batch(inputs)
        chunks = [self.forward_cached(batch[i:i + batch_size])[0] for i in range(0, len(batch), batch_size)]
        return np.concatenate(chunks, axis=0)

    # ------------------------------------------------------------------
    # Parameters
    # ------------------------------------------------------------------
    def parameters(self) -> dict[str, Tensor]:
        """Alle parameters als {"laag.naam": array}, in layer volgorde."""
        params = {}
        for name, layer in self.layers:
            for pname, value in layer.params().items():
                params[f"{name}.{pname}"] = value
        return params

    def set_parameters(self, params: dict[str, Tensor]) -> None:
        """Vervang parameters (kopieën); namen en vormen moeten kloppen."""
        current = self.parameters()
        if params.keys() != current.keys():
            raise ShapeMismatchError("Parameternamen", sorted(current), sorted(params))
        for key, value in params.items():
            value = np.asarray(value, dtype=np.float64)
            if value.shape != current[key].shape:
                raise ShapeMismatchError(f"Vorm van '{key}'", current[key].shape, value.shape)
            layer_name, pname = key.split(".", 1)
            setattr(self.layer(layer_name), pname, value.copy())

    def layer(self, name: str) -> Layer:
        for layer_name, layer in self.layers:
            if layer_name == name:
                return layer
        raise KeyError(name)

    def n_parameters(self) -> int:
        return int(sum(p.size for p in self.parameters().values()))

    def copy(self) -> "LayerStack":
        return copy.deepcopy(self)

    def describe(self) -> str:
        parts = [f"{name}:{type(layer).__name__}" for name, layer in self.layers]
        return f"{self.kind}({', '.join(parts)}; {self.n_parameters()} parameters)"
