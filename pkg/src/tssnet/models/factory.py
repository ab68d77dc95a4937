"""Herbouw een model uit zijn architectuurmetadata."""

from ..transform import TemporalTensorConfig
from ..utils.errors import InvalidConfigError
from .baselines import build_cnn1d
from .network import LayerStack
from .tssnet import build_tssnet


def build_from_arch(arch: dict) -> LayerStack:
    """
    Bouw een model met dezelfde architectuur als `arch` (parameters vers
    geïnitialiseerd met de opgeslagen seed).

    Raises:
        InvalidConfigError: Bij een onbekend model type of ontbrekende velden
    """
    kind = arch.get("kind")
    try:
        if kind == "tssnet":
            return build_tssnet(
                m=arch["m"],
                T=arch["T"],
                h=arch["h"],
                transform_cfg=TemporalTensorConfig(**arch["transform"]),
                k=arch["k"],
                kernel_height_mode=arch["kernel_height_mode"],
                hidden_multiplier=arch["hidden_multiplier"],
                seed=arch["seed"],
                kernel_height=arch["kernel_height"],
            )
        if kind == "cnn1d":
            return build_cnn1d(
                m=arch["m"],
                T=arch["T"],
                h=arch["h"],
                kernel_height=arch["kernel_height"],
                kernel_width=arch["kernel_width"],
                hidden_multiplier=arch["hidden_multiplier"],
                seed=arch["seed"],
                n_kernels=arch["n_kernels"],
            )
    except (KeyError, TypeError) as e:
        raise InvalidConfigError(f"Onvolledige architectuur voor '{kind}': {e}") from e
    raise InvalidConfigError(f"Onbekend model type '{kind}'.")
