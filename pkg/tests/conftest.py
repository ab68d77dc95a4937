"""
Gedeelde fixtures voor de TSSNet tests.

Zet de project root op sys.path zodat `src.tssnet`, `config` en `cli`
importeerbaar zijn.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

PROJECT_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.tssnet.data import SeriesMatrix, SynthSpec, make_windows, synth_generate  # noqa: E402


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def sine_series() -> SeriesMatrix:
    """Schone sinus met periode 24, T=600."""
    return synth_generate(SynthSpec(function="sine", length=600))


@pytest.fixture
def tiny_dataset(rng):
    """Kleine multivariate dataset voor gradient- en trainingstests (m=2, T_in=12, h=2)."""
    values = rng.standard_normal((2, 40))
    return make_windows(SeriesMatrix(values), 12, 2)
