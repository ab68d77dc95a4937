"""
Synthetische functiedatasets voor de feature-map studie.

Elke functie wordt geëvalueerd op x_t = t·Δx met ruis in de fase:
sin(x + αε_t), ε_t standaard normaal uit de seed.
"""

from dataclasses import asdict, dataclass
from typing import Callable, Literal

import numpy as np

from config import settings
from ..utils.errors import InvalidConfigError
from .series import SeriesMatrix

SynthFunction = Literal["sine", "sine-plus-linear", "x-times-sine", "sine-plus-half-linear"]


def _sine(x, wave, slope):
    return wave


def _sine_plus_linear(x, wave, slope):
    return wave + slope * x


def _x_times_sine(x, wave, slope):
    return x * wave


def _sine_plus_half_linear(x, wave, slope):
    return wave + 0.5 * slope * x


SYNTH_FUNCTIONS: dict[str, Callable[[np.ndarray, np.ndarray, float], np.ndarray]] = {
    "sine": _sine,
    "sine-plus-linear": _sine_plus_linear,
    "x-times-sine": _x_times_sine,
    "sine-plus-half-linear": _sine_plus_half_linear,
}

MAX_NOISE = 0.75


@dataclass(frozen=True)
class SynthSpec:
    """
    Recept voor een synthetische reeks.

    Attributes:
        function: Naam uit SYNTH_FUNCTIONS
        length: Aantal tijdstappen T (>= 2)
        step: Δx tussen tijdstappen
        noise: α in [0, 0.75]
        seed: Seed voor de ruis
        slope: Coëfficiënt c van de lineaire term
        phase: Constante faseverschuiving
    """

    function: SynthFunction = "sine"
    length: int = 2000
    step: float = settings.SYNTH_STEP
    noise: float = 0.0
    seed: int = 0
    slope: float = 1.0
    phase: float = 0.0

    def __post_init__(self):
        if self.function not in SYNTH_FUNCTIONS:
            raise InvalidConfigError(
                f"Onbekende functie '{self.function}'. Kies uit {', '.join(SYNTH_FUNCTIONS)}."
            )
        if self.length < 2:
            raise InvalidConfigError(f"Lengte moet >= 2 zijn (kreeg {self.length}).")
        if not 0.0 <= self.noise <= MAX_NOISE:
            raise InvalidConfigError(f"Ruisniveau α moet in [0, {MAX_NOISE}] liggen (kreeg {self.noise}).")
        if self.step <= 0:
            raise InvalidConfigError(f"Δx moet positief zijn (kreeg {self.step}).")

    @property
    def period(self) -> float:
        """Periode van de sinus in tijdstappen."""
        return 2 * np.pi / self.step

    def to_dict(self) -> dict:
        return asdict(self)


def _evaluate(spec: SynthSpec, phases: np.ndarray, eps: np.ndarray) -> np.ndarray:
    x = np.arange(spec.length) * spec.step
    wave = np.sin(x[None, :] + phases[:, None] + spec.noise * eps)
    return SYNTH_FUNCTIONS[spec.function](x[None, :], wave, spec.slope)


def synth_generate(spec: SynthSpec) -> SeriesMatrix:
    """
    Genereer een univariate reeks volgens de spec.

    Returns:
        SeriesMatrix van 1×T, volledig bepaald door de spec
    """
    eps = np.random.default_rng(spec.seed).standard_normal((1, spec.length))
    values = _evaluate(spec, np.array([spec.phase]), eps)
    return SeriesMatrix(values, [spec.function])


def synth_multivariate(spec: SynthSpec, n_features: int, phase_step: float = np.pi / 4) -> SeriesMatrix:
    """
    Stapel n_features fase-verschoven kopieën van dezelfde functie.

    Feature i krijgt fase spec.phase + i·phase_step en een eigen ruisrij uit
    dezelfde seed; rij 0 is gelijk aan synth_generate(spec).
    """
    if n_features < 1:
        raise InvalidConfigError(f"n_features moet >= 1 zijn (kreeg {n_features}).")
    eps = np.random.default_rng(spec.seed).standard_normal((n_features, spec.length))
    phases = spec.phase + np.arange(n_features) * phase_step
    values = _evaluate(spec, phases, eps)
    return SeriesMatrix(values, [f"{spec.function}_{i}" for i in range(n_features)])
