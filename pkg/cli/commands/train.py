"""train - fit TSSNet of de 1D CNN baseline, schrijf checkpoint en history."""

import logging

from cli.config import RunConfig
from cli.services.pipeline import build_model, output_path, prepare_splits
from src.tssnet.data import write_csv
from src.tssnet.training import save_checkpoint, train
from src.tssnet.utils.errors import InvalidConfigError

COMMAND = "train"
HELP = "Train een model en schrijf checkpoint + history.csv"
SYNOPSIS = "tssnet train [--config FILE] [--set model=tssnet] [--out-dir DIR]"

logger = logging.getLogger(__name__)


def add_arguments(parser) -> None:
    parser.add_argument("--history", default="history.csv", help="Bestandsnaam van de history binnen out_dir")


def handle(config: RunConfig, args) -> int:
    if config.model == "persistence":
        raise InvalidConfigError("Persistence heeft geen trainbare parameters; gebruik 'evaluate'.")

    data = prepare_splits(config)
    model = build_model(config, data.series.n_features, config.input_size, config.horizon)
    model, history = train(model, data.train, data.valid, config.train_config())

    meta = {
        "dataset": data.name,
        "feature_names": list(data.series.feature_names),
        "best_epoch": history.best_epoch,
        "best_valid_corr": history.best_valid_corr,
    }
    save_checkpoint(model, config.checkpoint_path, scaler=data.scaler, seed=config.seed, meta=meta)
    write_csv(history.to_frame(), output_path(config, args.history), config.header())
    logger.info(
        "Training klaar: beste epoch %d (valid_corr=%.4f), checkpoint %s",
        history.best_epoch, history.best_valid_corr, config.checkpoint_path,
    )
    return 0
