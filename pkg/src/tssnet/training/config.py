"""TrainConfig en SearchSpace."""

from dataclasses import asdict, dataclass
from typing import Literal

from config import settings
from ..metrics import CORR_VARIANTS
from ..utils.errors import InvalidConfigError

OptimizerName = Literal["adam", "sgd"]


@dataclass(frozen=True)
class TrainConfig:
    """
    Trainingsinstellingen.

    Attributes:
        optimizer: "adam" of "sgd"
        lr: Learning rate in (0, 0.01]
        clip: Drempel voor global-norm clipping
        batch_size: Samples per mini-batch
        max_epochs: Maximaal aantal epochs
        patience: Epochs zonder betere validatie-CORR voor early stopping
            (0 = nooit vroeg stoppen)
        seed: Seed voor het shuffelen
        corr_variant: CORR variant voor modelselectie
    """

    optimizer: OptimizerName = settings.DEFAULT_OPTIMIZER
    lr: float = settings.DEFAULT_LEARNING_RATE
    clip: float = settings.GRADIENT_CLIP
    batch_size: int = settings.DEFAULT_BATCH_SIZE
    max_epochs: int = settings.DEFAULT_MAX_EPOCHS
    patience: int = settings.DEFAULT_PATIENCE
    seed: int = 0
    corr_variant: str = "pearson"

    def __post_init__(self):
        if self.optimizer not in ("adam", "sgd"):
            raise InvalidConfigError(f"Onbekende optimizer '{self.optimizer}'.")
        if not 0 < self.lr <= settings.MAX_LEARNING_RATE:
            raise InvalidConfigError(
                f"Learning rate moet in (0, {settings.MAX_LEARNING_RATE}] liggen (kreeg {self.lr})."
            )
        if not self.clip > 0:
            raise InvalidConfigError(f"Clip drempel moet > 0 zijn (kreeg {self.clip}).")
        if self.batch_size < 1 or self.max_epochs < 1:
            raise InvalidConfigError("batch_size en max_epochs moeten >= 1 zijn.")
        if self.patience < 0:
            raise InvalidConfigError(f"patience moet >= 0 zijn (kreeg {self.patience}).")
        if self.corr_variant not in CORR_VARIANTS:
            raise InvalidConfigError(f"Onbekende CORR variant '{self.corr_variant}'.")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SearchSpace:
    """
    Zoekruimte voor random search.

    Attributes:
        window_range: Inclusief bereik voor ω (binnen [5, 10])
        stride_range: Inclusief bereik voor s (binnen [1, 5])
        lr_range: Bereik voor de learning rate, log-uniform getrokken
        budget: Aantal trials
        seed: Seed voor de trekkingen
    """

    window_range: tuple[int, int] = settings.SEARCH_WINDOW_RANGE
    stride_range: tuple[int, int] = settings.SEARCH_STRIDE_RANGE
    lr_range: tuple[float, float] = settings.SEARCH_LR_RANGE
    budget: int = settings.SEARCH_BUDGET
    seed: int = 0

    def __post_init__(self):
        lo, hi = settings.SEARCH_WINDOW_RANGE
        if not lo <= self.window_range[0] <= self.window_range[1] <= hi:
            raise InvalidConfigError(f"ω bereik {self.window_range} valt buiten [{lo}, {hi}].")
        lo, hi = settings.SEARCH_STRIDE_RANGE
        if not lo <= self.stride_range[0] <= self.stride_range[1] <= hi:
            raise InvalidConfigError(f"s bereik {self.stride_range} valt buiten [{lo}, {hi}].")
        if not 0 < self.lr_range[0] <= self.lr_range[1] <= settings.MAX_LEARNING_RATE:
            raise InvalidConfigError(
                f"lr bereik {self.lr_range} valt buiten (0, {settings.MAX_LEARNING_RATE}]."
            )
        if self.budget < 1:
            raise InvalidConfigError(f"budget moet >= 1 zijn (kreeg {self.budget}).")

    def to_dict(self) -> dict:
        return asdict(self)
