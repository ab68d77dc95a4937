"""Vergelijk analytische gradiënten met centrale differenties."""

import math
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from config import settings
from config.settings import logger
from ..models import LayerStack
from ..optim import batch_frobenius_loss
from ..utils.errors import InvalidConfigError, ShapeMismatchError


@dataclass
class ParameterCheck:
    name: str
    checked: int
    size: int
    max_rel_err: float


@dataclass
class GradCheckReport:
    """
    Resultaat van grad_check.

    Attributes:
        max_rel_err: Grootste relatieve fout over alle gecontroleerde coördinaten
        per_parameter: Eén regel per parametertensor
        epsilon: Gebruikte stapgrootte
    """

    max_rel_err: float
    per_parameter: list[ParameterCheck] = field(default_factory=list)
    epsilon: float = settings.GRADCHECK_EPSILON

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [(p.name, p.size, p.checked, p.max_rel_err) for p in self.per_parameter],
            columns=["parameter", "size", "checked", "max_rel_err"],
        )


def relative_error(analytic: float, numeric: float) -> float:
    """|a - f| / max(1, |a| + |f|)."""
    return abs(analytic - numeric) / max(1.0, abs(analytic) + abs(numeric))


def _loss(model: LayerStack, x: np.ndarray, y: np.ndarray) -> float:
    yhat, _, _ = model.forward_cached(x)
    return batch_frobenius_loss(y, yhat)[0]


def _coordinates(params: dict[str, np.ndarray], sample_size: int, full_limit: int, rng) -> dict[str, np.ndarray]:
    total = sum(p.size for p in params.values())
    coords = {}
    for name, value in params.items():
        if total <= full_limit:
            coords[name] = np.arange(value.size)
            continue
        # Proportioneel, minstens één per tensor: samen >= sample_size
        count = min(value.size, max(1, math.ceil(sample_size * value.size / total)))
        coords[name] = np.sort(rng.choice(value.size, size=count, replace=False))
    return coords


def grad_check(
    model: LayerStack,
    x: np.ndarray,
    y: np.ndarray,
    epsilon: float = settings.GRADCHECK_EPSILON,
    sample_size: int = settings.GRADCHECK_MAX_COORDINATES,
    full_limit: int = settings.GRADCHECK_FULL_LIMIT,
    seed: int = 0,
) -> GradCheckReport:
    """
    Controleer de gradiënt van de Frobenius loss voor één sample.

    Modellen met meer dan full_limit parameters worden op een geseede
    steekproef van minstens sample_size coördinaten gecontroleerd.

    Args:
        model: Het model; parameters worden tijdelijk verstoord en hersteld
        x: Input van vorm m×T
        y: Target van vorm m×h
        epsilon: Stap voor de centrale differentie

    Returns:
        GradCheckReport

    Raises:
        InvalidConfigError: Als epsilon <= 0
        ShapeMismatchError: Als x of y niet bij het model past
    """
    if not epsilon > 0:
        raise InvalidConfigError(f"epsilon moet > 0 zijn (kreeg {epsilon}).")
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.ndim == 2:
        x = x[None]
    if y.ndim == 2:
        y = y[None]
    if x.shape[0] != 1 or y.shape != (1, model.n_features, model.horizon):
        raise ShapeMismatchError("grad_check verwacht één sample", (1, model.n_features, model.horizon), y.shape)

    _, analytic = model.loss_and_gradients(x, y)
    # parameters() geeft de arrays van de layers zelf; in-place verstoren raakt het model
    params = model.parameters()
    coords = _coordinates(params, sample_size, full_limit, np.random.default_rng(seed))

    report = GradCheckReport(max_rel_err=0.0, epsilon=epsilon)
    for name, value in params.items():
        flat = value.reshape(-1)
        grad = analytic[name].reshape(-1)
        worst = 0.0
        for index in coords[name]:
            original = flat[index]
            flat[index] = original + epsilon
            plus = _loss(model, x, y)
            flat[index] = original - epsilon
            minus = _loss(model, x, y)
            flat[index] = original
            numeric = (plus - minus) / (2 * epsilon)
            worst = max(worst, relative_error(float(grad[index]), numeric))
        report.per_parameter.append(ParameterCheck(name, len(coords[name]), value.size, worst))
        report.max_rel_err = max(report.max_rel_err, worst)

    logger.info("Gradient check: max relatieve fout %.3e over %d tensors", report.max_rel_err, len(params))
    return report
