"""
Gradient clipping, SGD en Adam op dictionaries van parameters.

Parameters en gradiënten zijn dicts van naam naar array ("conv1.weight",
...). Alle stappen zijn puur: ze geven nieuwe arrays terug.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from config import settings
from ..core import Tensor, elementwise
from ..utils.errors import InvalidConfigError, ShapeMismatchError

Params = dict[str, Tensor]


def _check_pairs(params: Params, grads: Params) -> None:
    if params.keys() != grads.keys():
        raise ShapeMismatchError("Parameter- en gradiëntnamen", sorted(params), sorted(grads))
    for name, value in params.items():
        if value.shape != grads[name].shape:
            raise ShapeMismatchError(f"Gradiënt van '{name}'", value.shape, grads[name].shape)


def _check_lr(lr: float) -> None:
    if not lr > 0:
        raise InvalidConfigError(f"Learning rate moet > 0 zijn (kreeg {lr}).")


def global_norm(grads: Params) -> float:
    """L2 norm over alle gradiënten samen."""
    return math.sqrt(sum(float(np.vdot(g, g)) for g in grads.values()))


def clip_gradients(grads: Params, threshold: float = settings.GRADIENT_CLIP) -> Params:
    """
    Global-norm clipping.

    Als de globale L2 norm groter is dan threshold worden alle gradiënten
    met threshold/norm geschaald, anders blijven ze gelijk.

    Raises:
        InvalidConfigError: Als threshold <= 0
    """
    if not threshold > 0:
        raise InvalidConfigError(f"Clip drempel moet > 0 zijn (kreeg {threshold}).")
    norm = global_norm(grads)
    if norm <= threshold:
        return {name: g.copy() for name, g in grads.items()}
    factor = threshold / norm
    return {name: elementwise("scale", g, factor) for name, g in grads.items()}


def sgd_step(params: Params, grads: Params, lr: float) -> Params:
    """p ← p - lr·g voor elke parameter."""
    _check_lr(lr)
    _check_pairs(params, grads)
    return {name: elementwise("sub", p, elementwise("scale", grads[name], lr)) for name, p in params.items()}


@dataclass
class AdamState:
    """
    Eerste en tweede momenten per parameter plus de stapteller.

    Attributes:
        m: Eerste moment per parameternaam
        v: Tweede moment per parameternaam
        t: Aantal gezette stappen
    """

    m: Params = field(default_factory=dict)
    v: Params = field(default_factory=dict)
    t: int = 0
    beta1: float = settings.ADAM_BETA1
    beta2: float = settings.ADAM_BETA2
    epsilon: float = settings.ADAM_EPSILON

    @classmethod
    def for_params(cls, params: Params, **kwargs) -> "AdamState":
        zeros = {name: np.zeros_like(p) for name, p in params.items()}
        return cls(m=zeros, v={name: z.copy() for name, z in zeros.items()}, **kwargs)


def adam_step(params: Params, grads: Params, state: AdamState, lr: float) -> tuple[Params, AdamState]:
    """
    Eén Adam stap met bias correctie.

    Args:
        params: Huidige parameters
        grads: Gradiënten met dezelfde namen en vormen
        state: Momenten van de vorige stap (leeg = verse start)
        lr: Learning rate

    Returns:
        (nieuwe parameters, nieuwe state met t + 1)
    """
    _check_lr(lr)
    _check_pairs(params, grads)
    if not state.m:
        state = AdamState.for_params(params, beta1=state.beta1, beta2=state.beta2, epsilon=state.epsilon)
    _check_pairs(params, state.m)

    t = state.t + 1
    bc1 = 1.0 - state.beta1 ** t
    bc2 = 1.0 - state.beta2 ** t
    new_params, new_m, new_v = {}, {}, {}
    for name, p in params.items():
        g = grads[name]
        m = state.beta1 * state.m[name] + (1.0 - state.beta1) * g
        v = state.beta2 * state.v[name] + (1.0 - state.beta2) * (g * g)
        m_hat = m / bc1
        v_hat = v / bc2
        new_params[name] = p - lr * m_hat / (np.sqrt(v_hat) + state.epsilon)
        new_m[name] = m
        new_v[name] = v

    return new_params, AdamState(
        m=new_m, v=new_v, t=t, beta1=state.beta1, beta2=state.beta2, epsilon=state.epsilon
    )
