"""acf - autocorrelatie per feature plus een samenvatting van de dominante lags.

Naast de ACF wordt van het eerste input-venster (de eerste input_size
kolommen) de temporal tensor per feature geschreven, zodat de slices
naast de gevonden seizoenslag te bekijken zijn.
"""

import logging

import pandas as pd

from cli.config import RunConfig
from cli.services.pipeline import load_series, output_path
from src.tssnet.data import acf, dominant_lag, export_acf, export_temporal_tensor, write_csv
from src.tssnet.transform import slice_stack
from src.tssnet.utils.errors import DegenerateSampleError, TooShortError

COMMAND = "acf"
HELP = "Bereken de ACF en de temporal tensor van elke feature"
SYNOPSIS = "tssnet acf [--config FILE] [--set acf_max_lag=48] [--out-dir DIR]"

logger = logging.getLogger(__name__)

COLUMNS = ["feature", "file", "dominant_lag", "r", "status", "transform"]


def add_arguments(parser) -> None:
    pass


def handle(config: RunConfig, args) -> int:
    series = load_series(config)
    if series.length < config.input_size:
        raise TooShortError("Reeks korter dan input_size", length=series.length, required=config.input_size)

    cfg = config.transform_config()
    stack = slice_stack(series.values[:, :config.input_size], cfg)
    header = {**config.header(), "window_columns": f"0:{config.input_size}"}
    export_temporal_tensor(stack, output_path(config, "acf"), header)

    rows = []
    for index, name in enumerate(series.feature_names):
        transform_file = f"transform_{index}.csv"
        try:
            r = acf(series.values[index], config.acf_max_lag)
        except DegenerateSampleError:
            logger.warning("Feature '%s' is constant; ACF overgeslagen", name)
            rows.append({"feature": name, "file": "", "dominant_lag": None, "r": None, "status": "degenerate",
                         "transform": transform_file})
            continue
        export_acf(r, output_path(config, "acf", f"acf_{index}.csv"), {**config.header(), "feature": name})
        lag = dominant_lag(r)
        rows.append({"feature": name, "file": f"acf_{index}.csv", "dominant_lag": lag, "r": float(r[lag]),
                     "status": "ok", "transform": transform_file})

    summary = pd.DataFrame(rows, columns=COLUMNS)
    path = write_csv(summary, output_path(config, "acf", "summary.csv"), config.header())
    logger.info("ACF en temporal tensor (ω=%d, o=%d) van %d features geschreven, samenvatting: %s",
                cfg.window, stack.shape[-1], len(rows), path)
    return 0
