"""
TSSNet - Temporal Tensor Transformation Network

Toolkit voor multivariate tijdreeksvoorspelling met de Temporal-Slicing
Stack Transformation, een convolutioneel netwerk met handgeschreven
backprop, baselines, metrics, training en hyperparameter search.

Componenten:
- TemporalTensorConfig / slice_stack: de transformatie
- TssNetModel / build_tssnet: het netwerk
- Cnn1dBaseline / persistence_predict: baselines
- train / hyper_search / grad_check: training en audit
- rmse / corr / evaluate_model: metrics
"""

from .core import Tensor, elementwise, matmul, reduce, reshape, tensor_new
from .data import (
    CsvOptions,
    DataLoadError,
    EmptyFileError,
    ParseError,
    SeriesMatrix,
    SynthSpec,
    WindowedDataset,
    acf,
    load_csv,
    make_windows,
    scale,
    split_chronological,
    synth_generate,
    synth_multivariate,
)
from .metrics import AllDegenerateError, EvalReport, corr, evaluate_model, rmse
from .models import (
    Cnn1dBaseline,
    FeatureMaps,
    PersistenceForecaster,
    TssNetModel,
    build_cnn1d,
    build_tssnet,
    capture_feature_maps,
    forward,
    persistence_predict,
)
from .nn import KernelTooLargeError, StaleCacheError, backprop, init_params
from .optim import AdamState, adam_step, clip_gradients, frobenius_loss, sgd_step
from .training import (
    AllTrialsFailedError,
    CorruptCheckpointError,
    NonFiniteLossError,
    SearchSpace,
    TrainConfig,
    VersionMismatchError,
    grad_check,
    hyper_search,
    load_checkpoint,
    save_checkpoint,
    train,
)
from .transform import TemporalTensorConfig, pad_series, slice_count, slice_stack
from .utils.errors import (
    DegenerateSampleError,
    EmptyInputError,
    InvalidConfigError,
    InvalidShapeError,
    OutOfBoundsError,
    ShapeMismatchError,
    TooShortError,
    TSSNetError,
)

__version__ = "1.0.0"

__all__ = [
    # Tensor
    "Tensor",
    "tensor_new",
    "reshape",
    "matmul",
    "elementwise",
    "reduce",
    # Transformatie
    "TemporalTensorConfig",
    "slice_count",
    "pad_series",
    "slice_stack",
    # Data
    "SeriesMatrix",
    "WindowedDataset",
    "SynthSpec",
    "CsvOptions",
    "load_csv",
    "scale",
    "split_chronological",
    "make_windows",
    "synth_generate",
    "synth_multivariate",
    "acf",
    # Modellen
    "TssNetModel",
    "FeatureMaps",
    "build_tssnet",
    "forward",
    "capture_feature_maps",
    "Cnn1dBaseline",
    "build_cnn1d",
    "PersistenceForecaster",
    "persistence_predict",
    "backprop",
    "init_params",
    # Optimalisatie en training
    "frobenius_loss",
    "clip_gradients",
    "sgd_step",
    "adam_step",
    "AdamState",
    "TrainConfig",
    "SearchSpace",
    "train",
    "hyper_search",
    "grad_check",
    "save_checkpoint",
    "load_checkpoint",
    # Metrics
    "rmse",
    "corr",
    "evaluate_model",
    "EvalReport",
    # Exceptions
    "TSSNetError",
    "ShapeMismatchError",
    "InvalidShapeError",
    "OutOfBoundsError",
    "InvalidConfigError",
    "EmptyInputError",
    "TooShortError",
    "DegenerateSampleError",
    "AllDegenerateError",
    "KernelTooLargeError",
    "StaleCacheError",
    "DataLoadError",
    "ParseError",
    "EmptyFileError",
    "NonFiniteLossError",
    "AllTrialsFailedError",
    "VersionMismatchError",
    "CorruptCheckpointError",
]
