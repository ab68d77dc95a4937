"""predict - voorspel de h stappen na het einde van de reeks."""

import logging

import numpy as np

from cli.config import RunConfig
from cli.services.pipeline import build_model, load_model, load_series, output_path
from src.tssnet.data import SeriesMatrix, export_series
from src.tssnet.utils.errors import TooShortError

COMMAND = "predict"
HELP = "Voorspel de volgende h stappen vanaf de laatste T_in kolommen"
SYNOPSIS = "tssnet predict [--config FILE] [--set checkpoint=model.json] [--out-dir DIR]"

logger = logging.getLogger(__name__)


def add_arguments(parser) -> None:
    parser.add_argument("--output", default="forecast.csv", help="Bestandsnaam binnen out_dir")


def handle(config: RunConfig, args) -> int:
    series = load_series(config)
    if config.model == "persistence":
        model = build_model(config, series.n_features, config.input_size, config.horizon)
        scaler = None
    else:
        model, checkpoint = load_model(config)
        scaler = checkpoint.scaler

    if series.length < model.input_length:
        raise TooShortError("Reeks korter dan de inputlengte van het model", length=series.length,
                            required=model.input_length)

    window = series.values[:, -model.input_length:]
    if scaler is not None:
        window = scaler.apply(window)
    forecast = model.predict(window[None])[0]
    if scaler is not None:
        forecast = scaler.invert(forecast)

    result = SeriesMatrix(np.asarray(forecast), list(series.feature_names))
    path = export_series(result, output_path(config, args.output), config.header())
    logger.info("Voorspelling (%d×%d) geschreven: %s", result.n_features, result.length, path)
    return 0
