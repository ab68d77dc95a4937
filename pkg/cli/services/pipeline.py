"""Pipeline service - van RunConfig naar data, modellen en uitvoerbestanden."""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from cli.config import RunConfig
from src.tssnet.data import (
    CsvOptions,
    ScalerRecord,
    SeriesMatrix,
    WindowedDataset,
    load_csv,
    make_windows,
    scale,
    split_lengths,
    synth_generate,
    synth_multivariate,
    write_csv,
)
from src.tssnet.metrics import REPORT_COLUMNS, EvalReport
from src.tssnet.models import PersistenceForecaster, build_cnn1d, build_tssnet
from src.tssnet.training import Checkpoint, read_checkpoint
from src.tssnet.utils.errors import InvalidConfigError

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class PreparedData:
    """Geschaalde reeks plus de drie gewindowde splits."""

    series: SeriesMatrix
    scaler: Optional[ScalerRecord]
    train: WindowedDataset
    valid: WindowedDataset
    test: WindowedDataset
    name: str
    bounds: dict[str, tuple[int, int]] = field(default_factory=dict)

    def split(self, name: str) -> WindowedDataset:
        return {"train": self.train, "valid": self.valid, "test": self.test}[name]

    def target_starts(self, name: str) -> np.ndarray:
        """Absolute tijdindex van de eerste doelstap van elk sample in een split."""
        dataset = self.split(name)
        return self.bounds[name][0] + dataset.origins + dataset.input_length


def dataset_name(config: RunConfig) -> str:
    """Naam voor rapporten: expliciet, anders de bestandsnaam of de synthetische functie."""
    if config.dataset_name:
        return config.dataset_name
    if config.data:
        return Path(config.data).stem
    return f"synth-{config.synth_function}"


def load_series(config: RunConfig) -> SeriesMatrix:
    """
    Laad de ongeschaalde reeks: een CSV als `data` gezet is, anders synthetisch.

    Raises:
        DataLoadError, ParseError, EmptyFileError: Bij CSV problemen
    """
    if config.data:
        options = CsvOptions(
            has_header=config.has_header,
            delimiter=config.delimiter,
            select_columns=tuple(config.column_list) or None,
        )
        series = load_csv(config.data, options)
        logger.info("CSV geladen: %s (m=%d, T=%d)", config.data, series.n_features, series.length)
        return series

    spec = config.synth_spec()
    if config.synth_features > 1:
        return synth_multivariate(spec, config.synth_features, config.synth_phase_step)
    return synth_generate(spec)


def prepare_splits(
    config: RunConfig,
    series: Optional[SeriesMatrix] = None,
    input_size: Optional[int] = None,
    horizon: Optional[int] = None,
    scaler: Optional[ScalerRecord] = None,
) -> PreparedData:
    """
    Schaal, splits chronologisch en window elke split apart.

    De scaler wordt alleen op het trainingsdeel gefit. Een meegegeven
    scaler (uit een checkpoint) wordt ongewijzigd toegepast.

    Args:
        config: De run configuratie
        series: Ruwe reeks; standaard load_series(config)
        input_size: T_in, standaard config.input_size
        horizon: h, standaard config.horizon
        scaler: Bestaande scaler in plaats van een nieuwe fit

    Returns:
        PreparedData

    Raises:
        TooShortError: Als een split korter is dan T_in + h
    """
    series = series if series is not None else load_series(config)
    input_size = input_size or config.input_size
    horizon = horizon or config.horizon
    n_train, n_valid, _ = split_lengths(series.length, config.split_ratios)

    if scaler is not None:
        scaled = SeriesMatrix(scaler.apply(series.values), list(series.feature_names), scaler)
    else:
        scaled = scale(series, config.scaling, fit_range=(0, n_train))

    bounds = {"train": (0, n_train), "valid": (n_train, n_train + n_valid), "test": (n_train + n_valid, series.length)}
    windows = {
        name: make_windows(scaled.columns(start, stop), input_size, horizon, config.sample_stride)
        for name, (start, stop) in bounds.items()
    }
    logger.info(
        "Splits %d/%d/%d kolommen -> %d/%d/%d samples (T_in=%d, h=%d)",
        n_train, n_valid, series.length - n_train - n_valid,
        len(windows["train"]), len(windows["valid"]), len(windows["test"]), input_size, horizon,
    )
    return PreparedData(
        series=scaled,
        scaler=scaled.scaler,
        train=windows["train"],
        valid=windows["valid"],
        test=windows["test"],
        name=dataset_name(config),
        bounds=bounds,
    )


def build_model(config: RunConfig, m: int, input_size: int, horizon: int, **transform_overrides):
    """
    Bouw een vers model van het type `config.model`.

    Raises:
        InvalidConfigError: Bij een architectuur die niet bij de data past
    """
    if config.model == "tssnet":
        return build_tssnet(
            m=m,
            T=input_size,
            h=horizon,
            transform_cfg=config.transform_config(**transform_overrides),
            k=config.kernel_width,
            kernel_height_mode=config.kernel_height_mode,
            hidden_multiplier=config.hidden_multiplier,
            seed=config.model_seed,
            kernel_height=config.kernel_height,
        )
    if config.model == "cnn1d":
        return build_cnn1d(
            m=m,
            T=input_size,
            h=horizon,
            kernel_height=config.cnn_kernel_height or None,
            kernel_width=config.kernel_width,
            hidden_multiplier=config.hidden_multiplier,
            seed=config.model_seed,
        )
    return PersistenceForecaster(m, input_size, horizon, config.persistence_mode, config.persistence_period)


def model_args(config: RunConfig) -> dict:
    """build_tssnet argumenten voor de hyperparameter search."""
    return {
        "k": config.kernel_width,
        "kernel_height_mode": config.kernel_height_mode,
        "kernel_height": config.kernel_height,
        "hidden_multiplier": config.hidden_multiplier,
        "transform": config.transform_config().to_dict(),
    }


def load_model(config: RunConfig) -> tuple[object, Checkpoint]:
    """Lees het checkpoint uit de config en herbouw het model."""
    checkpoint = read_checkpoint(config.checkpoint_path)
    model = checkpoint.build_model()
    logger.info("Model geladen uit %s: %s", config.checkpoint_path, model.describe())
    return model, checkpoint


def output_path(config: RunConfig, *parts: str) -> Path:
    """
    Pad binnen out_dir.

    Raises:
        InvalidConfigError: Als het pad buiten out_dir zou vallen
    """
    root = config.out_path.resolve()
    path = root.joinpath(*parts).resolve()
    if not path.is_relative_to(root):
        raise InvalidConfigError(f"Uitvoerpad {path} valt buiten {root}.")
    return path


def report_frame(reports: Iterable[EvalReport]) -> pd.DataFrame:
    return pd.DataFrame([report.to_row() for report in reports], columns=REPORT_COLUMNS)


def write_reports(config: RunConfig, reports: Iterable[EvalReport], filename: str) -> Path:
    """Schrijf EvalReport rijen met de config als kop."""
    path = write_csv(report_frame(reports), output_path(config, filename), config.header())
    logger.info("Rapport geschreven: %s", path)
    return path
