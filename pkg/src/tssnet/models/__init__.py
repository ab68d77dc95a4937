"""TSSNet, de baselines en de gedeelde netwerkbasis."""

from .baselines import (
    Cnn1dBaseline,
    PersistenceForecaster,
    build_cnn1d,
    persistence_predict,
)
from .factory import build_from_arch
from .network import FeatureMaps, LayerStack
from .tssnet import (
    KERNEL_HEIGHT_MODES,
    TssNetModel,
    build_tssnet,
    capture_feature_maps,
    forward,
    parse_kernel_mode,
)

__all__ = [
    "LayerStack",
    "FeatureMaps",
    "TssNetModel",
    "KERNEL_HEIGHT_MODES",
    "build_tssnet",
    "parse_kernel_mode",
    "forward",
    "capture_feature_maps",
    "Cnn1dBaseline",
    "build_cnn1d",
    "PersistenceForecaster",
    "persistence_predict",
    "build_from_arch",
]
