"""
Geseede random search over ω, s en de learning rate.

Alle trekkingen gebeuren vooraf, zodat de trialreeks niet afhangt van
welke trials falen of hoe ze over processen verdeeld worden.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np
import pandas as pd

from config.settings import logger
from ..data.series import ScalerRecord, WindowedDataset
from ..metrics import evaluate_model
from ..models import TssNetModel, build_tssnet
from ..transform import TemporalTensorConfig
from ..utils.errors import TSSNetError
from .checkpoint import Checkpoint, make_checkpoint
from .config import SearchSpace, TrainConfig
from .trainer import train


class AllTrialsFailedError(TSSNetError):
    """Exception wanneer geen enkele trial een model opleverde."""

    def __init__(self, budget: int, errors: list[str]):
        self.budget = budget
        self.errors = errors
        first = errors[0] if errors else "onbekend"
        super().__init__(f"Alle {budget} trials zijn mislukt (eerste fout: {first}).")


@dataclass(frozen=True)
class TrialSpec:
    index: int
    window: int
    stride: int
    lr: float
    seed: int


@dataclass
class TrialRecord:
    """Eén regel van de trial log."""

    trial: int
    window: int
    stride: int
    lr: float
    valid_corr: float = float("nan")
    valid_rmse: float = float("nan")
    status: str = "ok"
    seed: int = 0

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def rank_key(self) -> tuple:
        # Hoogste CORR, dan laagste RMSE, dan de vroegste trial
        corr = self.valid_corr if math.isfinite(self.valid_corr) else -math.inf
        rmse = self.valid_rmse if math.isfinite(self.valid_rmse) else math.inf
        return (-corr, rmse, self.trial)


@dataclass(eq=False)
class SearchResult:
    """
    Uitkomst van hyper_search.

    Attributes:
        best: Winnende trial
        best_model: Getraind model van die trial
        trials: Alle trials in trial volgorde
    """

    best: TrialRecord
    best_model: TssNetModel
    trials: list[TrialRecord] = field(default_factory=list)
    scaler: Optional[ScalerRecord] = None

    @property
    def best_config(self) -> dict:
        return {"window": self.best.window, "stride": self.best.stride, "lr": self.best.lr, "seed": self.best.seed}

    @property
    def best_checkpoint(self) -> Checkpoint:
        return make_checkpoint(self.best_model, self.scaler, self.best.seed, {"search": self.best_config})

    def trial_frame(self) -> pd.DataFrame:
        """CSV schema: trial, ω, s, lr, valid_corr, valid_rmse, status."""
        return pd.DataFrame(
            [(t.trial, t.window, t.stride, t.lr, t.valid_corr, t.valid_rmse, t.status) for t in self.trials],
            columns=["trial", "ω", "s", "lr", "valid_corr", "valid_rmse", "status"],
        )


def draw_trials(space: SearchSpace) -> list[TrialSpec]:
    """Alle trials vooraf trekken; lr log-uniform."""
    rng = np.random.default_rng(space.seed)
    log_lo, log_hi = math.log(space.lr_range[0]), math.log(space.lr_range[1])
    trials = []
    for index in range(space.budget):
        window = int(rng.integers(space.window_range[0], space.window_range[1] + 1))
        stride = int(rng.integers(space.stride_range[0], space.stride_range[1] + 1))
        lr = float(math.exp(rng.uniform(log_lo, log_hi)))
        seed = int(rng.integers(0, 2**31 - 1))
        trials.append(TrialSpec(index, window, stride, min(lr, space.lr_range[1]), seed))
    return trials


def _run_trial(
    spec: TrialSpec,
    train_set: WindowedDataset,
    valid_set: WindowedDataset,
    model_args: dict,
    base_train: TrainConfig,
) -> tuple[TrialRecord, Optional[TssNetModel]]:
    record = TrialRecord(spec.index, spec.window, spec.stride, spec.lr, seed=spec.seed)
    try:
        args = dict(model_args)
        transform_args = dict(args.pop("transform", {}))
        transform_args.update(window=spec.window, stride=spec.stride)
        model = build_tssnet(
            m=train_set.n_features,
            T=train_set.input_length,
            h=train_set.horizon,
            transform_cfg=TemporalTensorConfig(**transform_args),
            seed=spec.seed,
            **args,
        )
        cfg = replace(base_train, lr=spec.lr, seed=spec.seed)
        model, _ = train(model, train_set, valid_set, cfg)
        report = evaluate_model(model, valid_set, "pearson")
        record.valid_corr = report.corr
        record.valid_rmse = report.rmse
        return record, model
    except TSSNetError as e:
        record.status = f"failed: {e}"
        return record, None


def hyper_search(
    space: SearchSpace,
    train_set: WindowedDataset,
    valid_set: WindowedDataset,
    model_args: Optional[dict] = None,
    base_train: Optional[TrainConfig] = None,
    jobs: int = 1,
    scaler: Optional[ScalerRecord] = None,
) -> SearchResult:
    """
    Random search met selectie op validatie-CORR (pearson).

    Args:
        space: Zoekruimte en budget
        train_set: Trainingssamples
        valid_set: Validatiesamples
        model_args: Extra build_tssnet argumenten (k, kernel_height_mode,
            hidden_multiplier, transform: {...})
        base_train: Basis TrainConfig; lr en seed komen per trial uit de trekking
        jobs: Aantal processen; > 1 gebruikt een ProcessPoolExecutor
        scaler: Scaler die in het beste checkpoint wordt opgenomen

    Returns:
        SearchResult met de winnaar en de volledige trial log

    Raises:
        AllTrialsFailedError: Als elke trial faalt
    """
    model_args = dict(model_args or {})
    base_train = base_train or TrainConfig()
    specs = draw_trials(space)
    logger.info("Hyperparameter search: %d trials, %d proces(sen)", len(specs), jobs)

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_run_trial, spec, train_set, valid_set, model_args, base_train) for spec in specs
            ]
            # Resultaten in trial volgorde, onafhankelijk van de planning
            outcomes = [future.result() for future in futures]
    else:
        outcomes = [_run_trial(spec, train_set, valid_set, model_args, base_train) for spec in specs]

    trials = []
    models = {}
    for record, model in outcomes:
        trials.append(record)
        if record.ok:
            models[record.trial] = model
            logger.debug(
                "Trial %d: ω=%d s=%d lr=%.2e corr=%.4f rmse=%.4f",
                record.trial, record.window, record.stride, record.lr, record.valid_corr, record.valid_rmse,
            )
        else:
            logger.warning("Trial %d overgeslagen: %s", record.trial, record.status)

    successful = [t for t in trials if t.ok]
    if not successful:
        raise AllTrialsFailedError(len(trials), [t.status for t in trials])

    best = min(successful, key=TrialRecord.rank_key)
    logger.info(
        "Beste trial %d: ω=%d s=%d lr=%.2e valid_corr=%.4f (%d van %d trials geslaagd)",
        best.trial, best.window, best.stride, best.lr, best.valid_corr, len(successful), len(trials),
    )
    return SearchResult(best=best, best_model=models[best.trial], trials=trials, scaler=scaler)
