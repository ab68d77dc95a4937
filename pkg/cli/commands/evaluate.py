"""evaluate - één EvalReport rij voor een checkpoint of de persistence baseline."""

import logging
import sys

from cli.config import RunConfig
from cli.services.pipeline import build_model, load_model, output_path, prepare_splits, report_frame, write_reports
from src.tssnet.data import export_predictions
from src.tssnet.metrics import evaluate_model

COMMAND = "evaluate"
HELP = "Evalueer een model op train, valid of test (RMSE en CORR)"
SYNOPSIS = "tssnet evaluate [--config FILE] [--set eval_split=test] [--out-dir DIR]"

logger = logging.getLogger(__name__)


def add_arguments(parser) -> None:
    parser.add_argument("--report", default="report.csv", help="Bestandsnaam van het rapport binnen out_dir")
    parser.add_argument("--predictions", default="predictions.csv",
                        help="Bestandsnaam voor waarheid en voorspelling per sample binnen out_dir")


def handle(config: RunConfig, args) -> int:
    if config.model == "persistence":
        data = prepare_splits(config)
        model = build_model(config, data.series.n_features, config.input_size, config.horizon)
        seed = None
    else:
        model, checkpoint = load_model(config)
        # Zelfde scaler en vensters als tijdens de training
        data = prepare_splits(config, input_size=model.input_length, horizon=model.horizon, scaler=checkpoint.scaler)
        seed = checkpoint.seed

    dataset = data.split(config.eval_split)
    dataset.require_samples()
    predictions = model.predict(dataset.inputs)
    report = evaluate_model(
        model,
        dataset,
        config.corr_variant,
        dataset_name=data.name,
        seed=seed,
        config=config.header(),
        predictions=predictions,
    )
    logger.info(
        "%s op %s: rmse=%.6g corr=%.6g (%d samples, %d degenerate)",
        report.model, config.eval_split, report.rmse, report.corr, report.n, report.skipped,
    )
    write_reports(config, [report], args.report)

    # Waarheid en voorspelling terug in de eenheden van de ruwe reeks
    truth = dataset.targets
    if data.scaler is not None:
        truth, predictions = data.scaler.invert(truth), data.scaler.invert(predictions)
    path = export_predictions(
        truth,
        predictions,
        data.target_starts(config.eval_split),
        list(data.series.feature_names),
        output_path(config, args.predictions),
        {**config.header(), "split": config.eval_split},
    )
    logger.info("Voorspellingen geschreven: %s", path)
    report_frame([report]).to_csv(sys.stdout, index=False, lineterminator="\n")
    return 0
