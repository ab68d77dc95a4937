"""gradcheck - vergelijk backprop met centrale differenties op één sample."""

import logging

from cli.config import RunConfig
from cli.services.pipeline import build_model, load_model, output_path, prepare_splits
from src.tssnet.data import write_csv
from src.tssnet.training import grad_check
from src.tssnet.utils.errors import InvalidConfigError

COMMAND = "gradcheck"
HELP = "Gradient audit: analytisch tegen centrale differenties"
SYNOPSIS = "tssnet gradcheck [--config FILE] [--set gradcheck_epsilon=1e-5] [--out-dir DIR]"

logger = logging.getLogger(__name__)


def add_arguments(parser) -> None:
    parser.add_argument("--from-checkpoint", action="store_true",
                        help="Controleer het model uit het checkpoint in plaats van een vers model")
    parser.add_argument("--report", default="gradcheck.csv", help="Bestandsnaam binnen out_dir")


def handle(config: RunConfig, args) -> int:
    if config.model == "persistence":
        raise InvalidConfigError("Persistence heeft geen parameters om te controleren.")

    if args.from_checkpoint:
        model, checkpoint = load_model(config)
        data = prepare_splits(config, input_size=model.input_length, horizon=model.horizon, scaler=checkpoint.scaler)
    else:
        data = prepare_splits(config)
        model = build_model(config, data.series.n_features, config.input_size, config.horizon)

    sample = data.train
    report = grad_check(model, sample.inputs[0], sample.targets[0], epsilon=config.gradcheck_epsilon, seed=config.seed)
    header = {**config.header(), "max_rel_err": report.max_rel_err}
    write_csv(report.to_frame(), output_path(config, args.report), header)

    if report.max_rel_err > config.gradcheck_tolerance:
        logger.error(
            "Gradient audit gefaald: max relatieve fout %.3e > %.1e", report.max_rel_err, config.gradcheck_tolerance
        )
        return 2
    logger.info("Gradient audit geslaagd: max relatieve fout %.3e", report.max_rel_err)
    return 0
