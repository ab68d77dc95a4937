"""Kwadratische Frobenius loss."""

import numpy as np

from ..core import Tensor, elementwise, reduce
from ..utils.errors import EmptyInputError, ShapeMismatchError


def frobenius_loss(y: Tensor, yhat: Tensor) -> tuple[float, Tensor]:
    """
    Kwadratische Frobenius norm van de fout voor één sample.

    Args:
        y: Ground truth (m×h)
        yhat: Voorspelling (m×h)

    Returns:
        (Σ(y - ŷ)², 2(ŷ - y))

    Raises:
        ShapeMismatchError: Als de vormen verschillen
    """
    y = np.asarray(y, dtype=np.float64)
    yhat = np.asarray(yhat, dtype=np.float64)
    if y.shape != yhat.shape:
        raise ShapeMismatchError("frobenius_loss vormen", y.shape, yhat.shape)
    diff = elementwise("sub", yhat, y)
    loss = reduce("sum", elementwise("mul", diff, diff)) if diff.size else 0.0
    return loss, elementwise("scale", diff, 2.0)


def batch_frobenius_loss(y: Tensor, yhat: Tensor) -> tuple[float, Tensor]:
    """
    Gemiddelde per-sample loss over een batch N×m×h.

    De gradiënt is die van het gemiddelde, dus 2(ŷ - y)/N per sample.
    """
    y = np.asarray(y, dtype=np.float64)
    yhat = np.asarray(yhat, dtype=np.float64)
    if y.shape != yhat.shape:
        raise ShapeMismatchError("batch loss vormen", y.shape, yhat.shape)
    if y.ndim < 1 or y.shape[0] == 0:
        raise EmptyInputError("Loss over een lege batch.")
    n = y.shape[0]
    total, grad = frobenius_loss(y, yhat)
    return total / n, grad / n
