"""
Evaluatie metrics: RMSE en de empirische correlatiecoëfficiënt (CORR).

Beide werken op n×m×h blokken: per sample één m×h voorspelling.
"""

import hashlib
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Literal, Optional

import numpy as np

from config.settings import logger
from ..core import Tensor
from ..data.series import WindowedDataset
from ..utils.errors import (
    DegenerateSampleError,
    EmptyInputError,
    InvalidConfigError,
    ShapeMismatchError,
    TSSNetError,
)

CorrVariant = Literal["pearson", "paper-literal"]
CORR_VARIANTS = ("pearson", "paper-literal")

REPORT_COLUMNS = ["dataset", "model", "T", "h", "ω", "s", "rmse", "corr", "corr_variant", "seed"]


class AllDegenerateError(TSSNetError):
    """Exception wanneer elk sample constant is en CORR dus niet bestaat."""

    def __init__(self, n_samples: int):
        self.n_samples = n_samples
        super().__init__(f"Alle {n_samples} samples zijn degenerate (constant); CORR is niet gedefinieerd.")


@dataclass(frozen=True)
class CorrResult:
    """CORR met het aantal gebruikte en overgeslagen samples."""

    value: float
    used: int
    skipped: int


def _check_blocks(y: Tensor, yhat: Tensor) -> tuple[Tensor, Tensor]:
    y = np.asarray(y, dtype=np.float64)
    yhat = np.asarray(yhat, dtype=np.float64)
    if y.shape != yhat.shape:
        raise ShapeMismatchError("Ground truth en voorspelling", y.shape, yhat.shape)
    if y.ndim == 2:
        y, yhat = y[None], yhat[None]
    if y.ndim != 3:
        raise ShapeMismatchError("Metrics verwachten n×m×h", 3, y.ndim)
    if y.shape[0] == 0:
        raise EmptyInputError("Metrics over nul samples.")
    return y, yhat


def rmse(y: Tensor, yhat: Tensor) -> float:
    """
    Gemiddelde over samples van de per-sample wortel uit de kwadratensom.

    Dit is (1/n)·Σᵢ sqrt(Σⱼ Σₜ (yᵢⱼₜ - ŷᵢⱼₜ)²), dus niet de gepoolde RMSE.

    Raises:
        ShapeMismatchError: Als de vormen verschillen
        EmptyInputError: Bij n = 0
    """
    y, yhat = _check_blocks(y, yhat)
    per_sample = np.sqrt(((y - yhat) ** 2).sum(axis=(1, 2)))
    return float(per_sample.mean())


def _sample_corr(y: Tensor, yhat: Tensor, variant: CorrVariant) -> float:
    # y en ŷ zijn m×h
    if variant == "pearson":
        a = y - y.mean()
        b = yhat - yhat.mean()
        denom = math.sqrt(float((a * a).sum()) * float((b * b).sum()))
    else:
        # Per tijdstap t het gemiddelde over de features; één wortel over
        # de som van producten van kwadraten
        a = y - y.mean(axis=0, keepdims=True)
        b = yhat - yhat.mean(axis=0, keepdims=True)
        denom = math.sqrt(float((a * a * b * b).sum()))
    if denom == 0.0:
        raise DegenerateSampleError("Constant sample")
    value = float((a * b).sum()) / denom
    if variant == "pearson":
        value = min(1.0, max(-1.0, value))
    return value


def corr_details(y: Tensor, yhat: Tensor, variant: CorrVariant = "pearson") -> CorrResult:
    """
    CORR met telling van overgeslagen samples.

    Raises:
        AllDegenerateError: Als er geen bruikbaar sample overblijft
    """
    if variant not in CORR_VARIANTS:
        raise InvalidConfigError(f"Onbekende CORR variant '{variant}' (gebruik {', '.join(CORR_VARIANTS)}).")
    y, yhat = _check_blocks(y, yhat)
    values = []
    skipped = 0
    for i in range(y.shape[0]):
        try:
            values.append(_sample_corr(y[i], yhat[i], variant))
        except DegenerateSampleError:
            skipped += 1
    if not values:
        raise AllDegenerateError(y.shape[0])
    if skipped:
        logger.warning("CORR: %d van %d samples overgeslagen (constant)", skipped, y.shape[0])
    return CorrResult(float(np.mean(values)), len(values), skipped)


def corr(y: Tensor, yhat: Tensor, variant: CorrVariant = "pearson") -> float:
    """
    Empirische correlatiecoëfficiënt, gemiddeld over samples.

    pearson: per sample de Pearson correlatie tussen de m·h waarden van y en
    ŷ, met per-sample gemiddelden. paper-literal: y en ŷ worden per tijdstap
    gecentreerd op het gemiddelde over de m features, en de noemer is
    sqrt(Σ (y-ȳ)²(ŷ-ŷ̄)²). Bij m = 1 is elk sample dan constant na
    centreren. Samples met een constante (gecentreerde) y of ŷ worden
    overgeslagen.
    """
    return corr_details(y, yhat, variant).value


def config_fingerprint(config: Optional[dict]) -> str:
    """Eerste 12 hex tekens van de sha256 van de gesorteerde JSON config."""
    payload = json.dumps(config or {}, sort_keys=True, default=str)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:12]


@dataclass
class EvalReport:
    """
    Resultaat van een evaluatie.

    Attributes:
        rmse: RMSE over alle samples
        corr: CORR (NaN als elk sample degenerate was)
        corr_variant: Gebruikte CORR variant
        n: Aantal samples
        m: Aantal features
        h: Horizon
        fingerprint: Hash van de configuratie
        skipped: Aantal degenerate samples
    """

    rmse: float
    corr: float
    corr_variant: CorrVariant
    n: int
    m: int
    h: int
    fingerprint: str = ""
    skipped: int = 0
    dataset: str = ""
    model: str = ""
    T: Optional[int] = None
    window: Optional[int] = None
    stride: Optional[int] = None
    seed: Optional[int] = None
    extra: dict = field(default_factory=dict)

    def to_row(self) -> dict:
        """Eén CSV rij: dataset,model,T,h,ω,s,rmse,corr,corr_variant,seed."""
        return {
            "dataset": self.dataset,
            "model": self.model,
            "T": self.T,
            "h": self.h,
            "ω": self.window,
            "s": self.stride,
            "rmse": self.rmse,
            "corr": self.corr,
            "corr_variant": self.corr_variant,
            "seed": self.seed,
        }

    def to_dict(self) -> dict:
        return asdict(self)


def evaluate_model(
    model,
    dataset: WindowedDataset,
    variant: CorrVariant = "pearson",
    dataset_name: str = "",
    seed: Optional[int] = None,
    config: Optional[dict] = None,
    predictions: Optional[Tensor] = None,
) -> EvalReport:
    """
    Voorspel elk sample en bereken RMSE en CORR.

    Args:
        model: Iets met predict(N×m×T) en n_features/input_length/horizon
        dataset: Te evalueren samples
        variant: CORR variant
        dataset_name: Naam voor het rapport
        seed: Seed voor het rapport
        config: Configuratie waarvan de fingerprint wordt opgenomen
        predictions: Eerder berekende N×m×h voorspellingen; standaard model.predict

    Returns:
        EvalReport

    Raises:
        EmptyInputError: Als de dataset leeg is
        ShapeMismatchError: Als de dataset niet bij het model past
    """
    dataset.require_samples()
    if dataset.n_features != model.n_features or dataset.input_length != model.input_length:
        raise ShapeMismatchError(
            "Dataset past niet bij het model (m, T_in)",
            (model.n_features, model.input_length),
            (dataset.n_features, dataset.input_length),
        )
    if dataset.horizon != model.horizon:
        raise ShapeMismatchError("Horizon van dataset en model", model.horizon, dataset.horizon)

    if predictions is None:
        predictions = model.predict(dataset.inputs)
    error = rmse(dataset.targets, predictions)
    try:
        result = corr_details(dataset.targets, predictions, variant)
        corr_value, skipped = result.value, result.skipped
    except AllDegenerateError:
        logger.warning("CORR niet gedefinieerd: alle %d samples zijn constant", len(dataset))
        corr_value, skipped = float("nan"), len(dataset)

    arch = getattr(model, "arch", {})
    transform = arch.get("transform", {})
    return EvalReport(
        rmse=error,
        corr=corr_value,
        corr_variant=variant,
        n=len(dataset),
        m=dataset.n_features,
        h=dataset.horizon,
        fingerprint=config_fingerprint(config if config is not None else arch),
        skipped=skipped,
        dataset=dataset_name,
        model=arch.get("kind", type(model).__name__),
        T=dataset.input_length,
        window=transform.get("window"),
        stride=transform.get("stride"),
        seed=seed if seed is not None else arch.get("seed"),
    )
