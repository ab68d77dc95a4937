"""search - random search over ω, s en lr; schrijft trial log en beste checkpoint."""

import logging

from cli.config import RunConfig
from cli.services.pipeline import model_args, output_path, prepare_splits
from src.tssnet.data import write_csv
from src.tssnet.training import hyper_search, save_checkpoint
from src.tssnet.utils.errors import InvalidConfigError

COMMAND = "search"
HELP = "Hyperparameter search met selectie op validatie-CORR"
SYNOPSIS = "tssnet search [--config FILE] [--set search_budget=100] [--jobs N] [--out-dir DIR]"

logger = logging.getLogger(__name__)


def add_arguments(parser) -> None:
    parser.add_argument("--trials", default="trials.csv", help="Bestandsnaam van de trial log binnen out_dir")


def handle(config: RunConfig, args) -> int:
    if config.model != "tssnet":
        raise InvalidConfigError("De hyperparameter search zoekt over TSSNet (ω, s, lr); zet model=tssnet.")

    data = prepare_splits(config)
    result = hyper_search(
        config.search_space(),
        data.train,
        data.valid,
        model_args=model_args(config),
        base_train=config.train_config(),
        jobs=config.jobs,
        scaler=data.scaler,
    )

    write_csv(result.trial_frame(), output_path(config, args.trials), config.header())
    checkpoint = result.best_checkpoint
    meta = {**checkpoint.meta, "dataset": data.name, "feature_names": list(data.series.feature_names)}
    save_checkpoint(result.best_model, config.checkpoint_path, scaler=data.scaler, seed=checkpoint.seed, meta=meta)
    logger.info("Beste configuratie: %s", result.best_config)
    return 0
