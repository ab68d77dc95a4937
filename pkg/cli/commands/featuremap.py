"""
featuremap - train per synthetische functie en ruisniveau een TSSNet en
exporteer de conv1 activaties (CSV + PGM per kernel) plus een index.
"""

import logging

import pandas as pd

from cli.config import RunConfig
from cli.services.pipeline import build_model, output_path, prepare_splits
from src.tssnet.data import export_feature_maps, synth_generate, write_csv
from src.tssnet.models import capture_feature_maps
from src.tssnet.training import train

COMMAND = "featuremap"
HELP = "Feature maps voor het raster van functies × ruisniveaus"
SYNOPSIS = "tssnet featuremap [--config FILE] [--set featuremap_noise=0,0.5] [--out-dir DIR]"

logger = logging.getLogger(__name__)


def add_arguments(parser) -> None:
    parser.add_argument("--split", choices=["train", "valid", "test"], default="test",
                        help="Split waarvan het eerste sample de maps levert")


def _cell_dir(function: str, noise: float) -> str:
    return f"{function}_a{noise:g}"


def handle(config: RunConfig, args) -> int:
    cell_config = config.model_copy(update={"model": "tssnet", "kernel_height_mode": config.featuremap_kernel_mode})
    rows = []
    for function in config.featuremap_function_list:
        for noise in config.featuremap_noise_list:
            spec = config.synth_spec(function=function, noise=noise)
            data = prepare_splits(cell_config, series=synth_generate(spec))
            model = build_model(cell_config, 1, config.input_size, config.horizon)
            model, history = train(model, data.train, data.valid, config.train_config())

            maps = capture_feature_maps(model, data.split(args.split).inputs[0])
            header = {**config.header(), "function": function, "noise": noise, "layer": maps.layer}
            directory = _cell_dir(function, noise)
            export_feature_maps(maps.maps, output_path(config, "featuremaps", directory), header=header)
            for kernel in range(maps.n_kernels):
                rows.append({
                    "function": function,
                    "noise": noise,
                    "kernel": kernel,
                    "csv": f"{directory}/kernel_{kernel}.csv",
                    "pgm": f"{directory}/kernel_{kernel}.pgm",
                    "height": maps.plane[0],
                    "width": maps.plane[1],
                    "valid_corr": history.best_valid_corr,
                })
            logger.info("Feature maps %s α=%g: %d kernels, plane %s", function, noise, maps.n_kernels, maps.plane)

    index = pd.DataFrame(rows, columns=["function", "noise", "kernel", "csv", "pgm", "height", "width", "valid_corr"])
    path = write_csv(index, output_path(config, "featuremaps", "index.csv"), config.header())
    logger.info("Feature map index geschreven: %s (%d maps)", path, len(rows))
    return 0
