"""
Trainingsloop met mini-batches, gradient clipping en modelselectie op
validatie-CORR.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import pandas as pd

from config.settings import logger
from ..data.series import WindowedDataset
from ..metrics import evaluate_model
from ..optim import AdamState, adam_step, clip_gradients, global_norm, sgd_step
from ..utils.errors import ShapeMismatchError, TSSNetError
from .config import TrainConfig


class NonFiniteLossError(TSSNetError):
    """Exception wanneer de loss NaN of Inf wordt."""

    def __init__(self, epoch: int, step: int, loss: float, grad_norm: Optional[float] = None):
        self.epoch = epoch
        self.step = step
        self.loss = loss
        self.grad_norm = grad_norm
        super().__init__(
            f"Niet-eindige loss {loss} in epoch {epoch}, stap {step} (gradiëntnorm {grad_norm}). "
            f"Verlaag de learning rate of controleer de schaling van de data."
        )


@dataclass
class EpochRecord:
    epoch: int
    train_loss: float
    valid_corr: float
    valid_rmse: float


@dataclass
class TrainHistory:
    """
    Verloop van een trainingsrun.

    Attributes:
        epochs: Eén record per epoch
        grad_norms: Per optimizer stap (norm voor clipping, norm na clipping)
        best_epoch: Epoch waarvan de parameters zijn teruggegeven
        best_valid_corr: De bijbehorende validatie-CORR
        stopped_early: Of patience de run heeft beëindigd
    """

    epochs: list[EpochRecord] = field(default_factory=list)
    grad_norms: list[tuple[float, float]] = field(default_factory=list)
    best_epoch: int = 0
    best_valid_corr: float = float("nan")
    stopped_early: bool = False

    @property
    def final_train_loss(self) -> float:
        return self.epochs[-1].train_loss if self.epochs else float("nan")

    def to_frame(self) -> pd.DataFrame:
        """CSV schema: epoch, train_loss, valid_corr, valid_rmse."""
        return pd.DataFrame(
            [(r.epoch, r.train_loss, r.valid_corr, r.valid_rmse) for r in self.epochs],
            columns=["epoch", "train_loss", "valid_corr", "valid_rmse"],
        )


def _check_dims(model, dataset: WindowedDataset, name: str) -> None:
    dataset.require_samples()
    expected = (model.n_features, model.input_length, model.horizon)
    actual = (dataset.n_features, dataset.input_length, dataset.horizon)
    if expected != actual:
        raise ShapeMismatchError(f"{name} set past niet bij het model (m, T_in, h)", expected, actual)


def _score(value: float) -> float:
    return value if math.isfinite(value) else -math.inf


def train(model, train_set: WindowedDataset, valid_set: WindowedDataset, cfg: TrainConfig):
    """
    Train een model en geef de parameters met de beste validatie-CORR terug.

    Per batch: forward → batch-gemiddelde Frobenius loss → backprop →
    global-norm clipping → optimizer stap. Het invoermodel wordt niet
    aangepast; er wordt op een kopie getraind.

    Args:
        model: TssNetModel of Cnn1dBaseline
        train_set: Trainingssamples
        valid_set: Validatiesamples voor modelselectie
        cfg: Trainingsinstellingen

    Returns:
        (getraind model, TrainHistory)

    Raises:
        EmptyInputError: Als een dataset leeg is
        ShapeMismatchError: Als de datasets niet bij het model passen
        NonFiniteLossError: Als de loss divergeert
    """
    _check_dims(model, train_set, "Train")
    _check_dims(model, valid_set, "Valid")

    model = model.copy()
    rng = np.random.default_rng(cfg.seed)
    params = {name: value.copy() for name, value in model.parameters().items()}
    adam = AdamState()
    history = TrainHistory()
    best_params = None
    best_score = -math.inf
    stale_epochs = 0

    logger.info(
        "Training %s: %d train / %d valid samples, %s lr=%g, batch=%d, max %d epochs",
        model.kind, len(train_set), len(valid_set), cfg.optimizer, cfg.lr, cfg.batch_size, cfg.max_epochs,
    )

    for epoch in range(1, cfg.max_epochs + 1):
        order = rng.permutation(len(train_set))
        loss_sum = 0.0
        for step, (x, y) in enumerate(train_set.batches(cfg.batch_size, order)):
            model.set_parameters(params)
            loss, grads = model.loss_and_gradients(x, y)
            pre_norm = global_norm(grads)
            if not math.isfinite(loss) or not math.isfinite(pre_norm):
                logger.error("Niet-eindige loss in epoch %d, stap %d: %s", epoch, step, loss)
                raise NonFiniteLossError(epoch, step, loss, pre_norm)
            clipped = clip_gradients(grads, cfg.clip)
            history.grad_norms.append((pre_norm, global_norm(clipped)))
            if cfg.optimizer == "adam":
                params, adam = adam_step(params, clipped, adam, cfg.lr)
            else:
                params = sgd_step(params, clipped, cfg.lr)
            loss_sum += loss * len(x)

        model.set_parameters(params)
        report = evaluate_model(model, valid_set, cfg.corr_variant)
        record = EpochRecord(epoch, loss_sum / len(train_set), report.corr, report.rmse)
        history.epochs.append(record)
        logger.debug(
            "Epoch %d: train_loss=%.6g valid_corr=%.4f valid_rmse=%.4f",
            epoch, record.train_loss, record.valid_corr, record.valid_rmse,
        )

        if best_params is None or _score(report.corr) > best_score:
            best_score = _score(report.corr)
            best_params = {name: value.copy() for name, value in params.items()}
            history.best_epoch = epoch
            history.best_valid_corr = report.corr
            stale_epochs = 0
        else:
            stale_epochs += 1
            if cfg.patience and stale_epochs >= cfg.patience:
                history.stopped_early = True
                logger.info("Early stopping na epoch %d (geen verbetering in %d epochs)", epoch, cfg.patience)
                break

    model.set_parameters(best_params)
    logger.info(
        "Training klaar: beste epoch %d, valid_corr=%.4f, laatste train_loss=%.6g",
        history.best_epoch, history.best_valid_corr, history.final_train_loss,
    )
    return model, history
