"""
TSSNet: transformatie → (conv + pool) ×2 → flatten → fc1 → output.

Het conv-vlak heeft de slice-as o als hoogte en de venster-as ω als
breedte, met de m features als kanalen. In full-stack mode is de conv1
kernel o×k en valid, zodat de output hoogte 1 heeft. In fixed(k_h) mode is
de kernel k_h×k met same-zero padding en blijft het vlak o×ω; de
feature maps worden dan als ω×o gerapporteerd, zoals de transformatie ze
stapelt.
"""

import re
from typing import Optional

import numpy as np

from config import settings
from config.settings import logger
from ..core import Tensor
from ..nn import ConvSpec, DenseSpec, FlattenLayer, MaxPool2dLayer, init_params, make_rng
from ..transform import TemporalTensorConfig, slice_count, transform_values
from ..utils.errors import InvalidConfigError
from .network import FeatureMaps, LayerStack

KERNEL_HEIGHT_MODES = ("full-stack", "fixed")

_FIXED_PATTERN = re.compile(r"^fixed\((\d+)\)$")


def parse_kernel_mode(text: str, default_height: int = settings.DEFAULT_KERNEL_HEIGHT) -> tuple[str, int]:
    """
    Lees "full-stack", "fixed" of "fixed(3)".

    Returns:
        (mode, kernel_height)
    """
    text = text.strip()
    if text in KERNEL_HEIGHT_MODES:
        return text, default_height
    match = _FIXED_PATTERN.match(text)
    if match:
        return "fixed", int(match.group(1))
    raise InvalidConfigError(f"Onbekende kernel_height_mode '{text}' (gebruik full-stack of fixed(k_h)).")


def _pool() -> MaxPool2dLayer:
    return MaxPool2dLayer(*settings.POOL_SIZE)


class TssNetModel(LayerStack):
    """TSSNet met transformatieconfig en architectuurmetadata."""

    kind = "tssnet"

    def __init__(self, layers, transform_cfg: TemporalTensorConfig, arch: dict):
        super().__init__(layers, arch["m"], arch["T"], arch["h"], arch)
        self.transform_cfg = transform_cfg

    @property
    def slices(self) -> int:
        return slice_count(self.transform_cfg, self.input_length)

    @property
    def kernel_height_mode(self) -> str:
        return self.arch["kernel_height_mode"]

    @property
    def k(self) -> int:
        return self.arch["k"]

    conv1 = property(lambda self: self.layer("conv1"))
    pool1 = property(lambda self: self.layer("pool1"))
    conv2 = property(lambda self: self.layer("conv2"))
    pool2 = property(lambda self: self.layer("pool2"))
    fc1 = property(lambda self: self.layer("fc1"))
    out = property(lambda self: self.layer("out"))

    def adapt_input(self, x: Tensor) -> Tensor:
        # N×m×ω×o -> N×m×o×ω
        stacked = transform_values(x, self.transform_cfg)
        return np.ascontiguousarray(np.swapaxes(stacked, 2, 3))

    def capture_transform(self, maps: Tensor) -> Tensor:
        # Terug naar ω×o per kernel
        return np.ascontiguousarray(np.swapaxes(maps, -1, -2))


def build_tssnet(
    m: int,
    T: int,
    h: int,
    transform_cfg: Optional[TemporalTensorConfig] = None,
    k: int = settings.DEFAULT_KERNEL_WIDTH,
    kernel_height_mode: str = "full-stack",
    hidden_multiplier: int = settings.DEFAULT_HIDDEN_MULTIPLIER,
    seed: int = 0,
    kernel_height: int = settings.DEFAULT_KERNEL_HEIGHT,
) -> TssNetModel:
    """
    Bouw een TSSNet.

    Args:
        m: Aantal features (kanalen en aantal kernels per conv)
        T: Inputlengte
        h: Horizon
        transform_cfg: Transformatie hyperparameters
        k: Kernelbreedte over de venster-as (k <= ω)
        kernel_height_mode: "full-stack", "fixed" of "fixed(k_h)"
        hidden_multiplier: fc1 breedte = hidden_multiplier·m·h
        seed: Seed voor de initialisatie
        kernel_height: k_h voor fixed mode

    Returns:
        Geïnitialiseerd TssNetModel

    Raises:
        InvalidConfigError: Bij een ongeldige transformatie, k > ω of een
            hidden_multiplier < 2
    """
    transform_cfg = transform_cfg or TemporalTensorConfig()
    if min(m, T, h) < 1:
        raise InvalidConfigError(f"m, T en h moeten >= 1 zijn (kreeg {m}, {T}, {h}).")
    mode, kernel_height = parse_kernel_mode(kernel_height_mode, kernel_height)
    o = slice_count(transform_cfg, T)
    omega = transform_cfg.window
    if k < 1 or k > omega:
        raise InvalidConfigError(f"Kernelbreedte k={k} moet in [1, ω={omega}] liggen.")
    if kernel_height < 1:
        raise InvalidConfigError(f"Kernelhoogte moet >= 1 zijn (kreeg {kernel_height}).")
    if hidden_multiplier < 2:
        # fc1 moet breder zijn dan de m·h outputs
        raise InvalidConfigError(f"hidden_multiplier moet >= 2 zijn (kreeg {hidden_multiplier}).")

    rng = make_rng(seed)
    if mode == "full-stack":
        conv1_spec = ConvSpec(m, m, o, k, "valid")
        conv2_spec = ConvSpec(m, m, 1, k, "same-zero")
    else:
        conv1_spec = ConvSpec(m, m, kernel_height, k, "same-zero")
        conv2_spec = ConvSpec(m, m, kernel_height, k, "same-zero")

    conv1 = init_params(conv1_spec, rng)
    pool1 = _pool()
    height, width = pool1.output_plane(*conv1.output_plane(o, omega))
    conv2 = init_params(conv2_spec, rng)
    pool2 = _pool()
    height, width = pool2.output_plane(*conv2.output_plane(height, width))

    flat = m * height * width
    hidden = hidden_multiplier * m * h
    fc1 = init_params(DenseSpec(flat, hidden), rng)
    out = init_params(DenseSpec(hidden, m * h), rng)

    arch = {
        "kind": TssNetModel.kind,
        "m": m,
        "T": T,
        "h": h,
        "transform": transform_cfg.to_dict(),
        "k": k,
        "kernel_height_mode": mode,
        "kernel_height": kernel_height,
        "hidden_multiplier": hidden_multiplier,
        "seed": seed,
    }
    layers = [
        ("conv1", conv1),
        ("pool1", pool1),
        ("conv2", conv2),
        ("pool2", pool2),
        ("flatten", FlattenLayer()),
        ("fc1", fc1),
        ("out", out),
    ]
    model = TssNetModel(layers, transform_cfg, arch)
    logger.debug("TSSNet gebouwd: o=%d, flatten=%d, %s", o, flat, model.describe())
    return model


def forward(model: LayerStack, x, capture: bool = False) -> tuple[Tensor, Optional[FeatureMaps]]:
    """Functionele vorm van model.forward."""
    return model.forward(x, capture=capture)


def capture_feature_maps(model: LayerStack, x) -> FeatureMaps:
    """Activaties na conv1, één 2D map per kernel."""
    _, maps = model.forward(x, capture=True)
    return maps
