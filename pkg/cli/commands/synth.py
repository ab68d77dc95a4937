"""synth - schrijf een synthetische reeks als CSV."""

import logging

from cli.config import RunConfig
from cli.services.pipeline import load_series, output_path
from src.tssnet.data import export_series

COMMAND = "synth"
HELP = "Genereer een synthetische reeks (sine, sine-plus-linear, ...)"
SYNOPSIS = "tssnet synth [--config FILE] [--set synth_function=sine] [--out-dir DIR]"

logger = logging.getLogger(__name__)


def add_arguments(parser) -> None:
    parser.add_argument("--output", default="series.csv", help="Bestandsnaam binnen out_dir")


def handle(config: RunConfig, args) -> int:
    series = load_series(config.model_copy(update={"data": ""}))
    path = export_series(series, output_path(config, args.output), config.header())
    logger.info("Reeks geschreven: %s (m=%d, T=%d)", path, series.n_features, series.length)
    return 0
