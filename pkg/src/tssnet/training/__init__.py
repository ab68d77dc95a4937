"""Training, hyperparameter search, gradient audit en checkpoints."""

from .checkpoint import (
    Checkpoint,
    CheckpointError,
    CorruptCheckpointError,
    VersionMismatchError,
    load_checkpoint,
    make_checkpoint,
    parameter_checksum,
    read_checkpoint,
    save_checkpoint,
)
from .config import SearchSpace, TrainConfig
from .gradcheck import GradCheckReport, ParameterCheck, grad_check, relative_error
from .search import AllTrialsFailedError, SearchResult, TrialRecord, TrialSpec, draw_trials, hyper_search
from .trainer import EpochRecord, NonFiniteLossError, TrainHistory, train

__all__ = [
    "TrainConfig",
    "SearchSpace",
    "train",
    "TrainHistory",
    "EpochRecord",
    "NonFiniteLossError",
    "hyper_search",
    "draw_trials",
    "SearchResult",
    "TrialRecord",
    "TrialSpec",
    "AllTrialsFailedError",
    "grad_check",
    "relative_error",
    "GradCheckReport",
    "ParameterCheck",
    "Checkpoint",
    "CheckpointError",
    "VersionMismatchError",
    "CorruptCheckpointError",
    "make_checkpoint",
    "save_checkpoint",
    "read_checkpoint",
    "load_checkpoint",
    "parameter_checksum",
]
