"""
sweep - input size × horizon raster; per cel trainen en één rapportrij.

Met --jobs > 1 draaien de cellen in een ProcessPoolExecutor; de rijen
worden in rastervolgorde (input, dan horizon) samengevoegd.
"""

import logging
from concurrent.futures import ProcessPoolExecutor

from cli.config import RunConfig
from cli.services.pipeline import build_model, prepare_splits, write_reports
from src.tssnet.metrics import EvalReport, evaluate_model
from src.tssnet.training import train

COMMAND = "sweep"
HELP = "Sensitiviteitsraster input size × horizon, één rapportrij per cel"
SYNOPSIS = "tssnet sweep [--config FILE] [--set sweep_inputs=32,64,128,256] [--jobs N] [--out-dir DIR]"

logger = logging.getLogger(__name__)


def add_arguments(parser) -> None:
    parser.add_argument("--report", default="sweep.csv", help="Bestandsnaam van het rapport binnen out_dir")


def run_cell(config: RunConfig, input_size: int, horizon: int) -> EvalReport:
    """Train en evalueer één (T_in, h) cel; top-level zodat een proces pool hem kan picklen."""
    data = prepare_splits(config, input_size=input_size, horizon=horizon)
    model = build_model(config, data.series.n_features, input_size, horizon)
    if config.model != "persistence":
        model, _ = train(model, data.train, data.valid, config.train_config())
    report = evaluate_model(
        model,
        data.split(config.eval_split),
        config.corr_variant,
        dataset_name=data.name,
        seed=config.seed,
        config=config.header(),
    )
    logger.info("Sweep cel T_in=%d h=%d: rmse=%.6g corr=%.6g", input_size, horizon, report.rmse, report.corr)
    return report


def handle(config: RunConfig, args) -> int:
    grid = [(t, h) for t in config.sweep_input_list for h in config.sweep_horizon_list]
    logger.info("Sweep over %d cellen met %d proces(sen)", len(grid), config.jobs)

    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [pool.submit(run_cell, config, t, h) for t, h in grid]
            reports = [future.result() for future in futures]
    else:
        reports = [run_cell(config, t, h) for t, h in grid]

    write_reports(config, reports, args.report)
    return 0
