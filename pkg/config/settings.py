"""
Centrale configuratie voor de TSSNet voorspel-toolkit.

Instellingen kunnen worden overschreven via environment variables.
"""
import logging
import math
import os
import sys
from pathlib import Path

# =============================================================================
# Logging configuratie
# =============================================================================
LOG_LEVEL = os.getenv("TSSNET_LOG_LEVEL", "INFO").upper()


def setup_logging(name: str = "tssnet", level: str | None = None) -> logging.Logger:
    """
    Configureer en retourneer een logger.

    Args:
        name: Naam van de logger
        level: Optioneel log level, overschrijft TSSNET_LOG_LEVEL

    Returns:
        Geconfigureerde logger instance
    """
    logger = logging.getLogger(name)
    resolved = getattr(logging, (level or LOG_LEVEL).upper(), logging.INFO)
    logger.setLevel(resolved)

    # Voorkom dubbele handlers bij herhaalde aanroepen
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(resolved)
        return logger

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(resolved)

    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    )
    handler.setFormatter(formatter)
    logger.addHandler(handler)
    # De CLI configureert ook de root logger; niet dubbel printen
    logger.propagate = False

    return logger


# Maak standaard logger beschikbaar
logger = setup_logging()

# Paths
BASE_DIR = Path(__file__).resolve().parent.parent
RUNS_DIR = Path(os.getenv("TSSNET_OUT_DIR", str(BASE_DIR / "runs")))

# Debug mode
DEBUG = os.getenv("TSSNET_DEBUG", "false").lower() == "true"

# =============================================================================
# Transformatie
# =============================================================================
DEFAULT_WINDOW = 8
DEFAULT_STRIDE = 2
DEFAULT_DILATION = 1
DEFAULT_PADDING = 0  # padding staat uit tenzij expliciet gevraagd
DEFAULT_PADDING_MODE = "edge-replicate"

# =============================================================================
# Netwerk
# =============================================================================
DEFAULT_KERNEL_WIDTH = 3
DEFAULT_KERNEL_HEIGHT = 3  # alleen voor fixed kernel mode
DEFAULT_HIDDEN_MULTIPLIER = 2
POOL_SIZE = (2, 2)

# =============================================================================
# Training
# =============================================================================
DEFAULT_OPTIMIZER = "adam"
DEFAULT_LEARNING_RATE = 0.005
MAX_LEARNING_RATE = 0.01
GRADIENT_CLIP = 10.0
DEFAULT_BATCH_SIZE = 32
DEFAULT_MAX_EPOCHS = 100
DEFAULT_PATIENCE = 10
EVAL_BATCH_SIZE = 256  # vaste batchgrootte zodat evaluaties bit-gelijk blijven

ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPSILON = 1e-8

# =============================================================================
# Hyperparameter search
# =============================================================================
SEARCH_BUDGET = 100
SEARCH_WINDOW_RANGE = (5, 10)
SEARCH_STRIDE_RANGE = (1, 5)
SEARCH_LR_RANGE = (1e-4, MAX_LEARNING_RATE)

# =============================================================================
# Data
# =============================================================================
SPLIT_RATIOS = (0.6, 0.2, 0.2)
DEFAULT_SCALING = "max-abs"
DEFAULT_SAMPLE_STRIDE = 1
DEFAULT_INPUT_SIZE = 168
DEFAULT_HORIZON = 15
SYNTH_STEP = 2 * math.pi / 24  # periode van 24 tijdstappen
SYNTH_NOISE_LEVELS = (0.0, 0.25, 0.5, 0.75)

# Sensitiviteitsanalyse input vs horizon
SWEEP_INPUT_SIZES = (32, 64, 128, 256)
SWEEP_HORIZONS = (15, 30, 60, 120)

# =============================================================================
# Checkpoints
# =============================================================================
CHECKPOINT_VERSION = "tssnet-ckpt-1"
GRADCHECK_EPSILON = 1e-5
GRADCHECK_MAX_COORDINATES = 200  # steekproefgrootte voor grote modellen
GRADCHECK_FULL_LIMIT = 5000  # tot zoveel parameters wordt alles gecontroleerd
