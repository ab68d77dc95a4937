"""Objective en optimizers."""

from .loss import batch_frobenius_loss, frobenius_loss
from .optimizers import AdamState, Params, adam_step, clip_gradients, global_norm, sgd_step

__all__ = [
    "frobenius_loss",
    "batch_frobenius_loss",
    "clip_gradients",
    "global_norm",
    "sgd_step",
    "adam_step",
    "AdamState",
    "Params",
]
