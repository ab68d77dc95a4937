"""
RunConfig: één platte configuratie voor een CLI run.

Prioriteit (laag naar hoog): defaults < TSSNET_* environment variables <
"key = value" configbestand < --set key=value vlaggen. Onbekende keys
worden geweigerd en alle beperkingen van de onderliggende configs
(TemporalTensorConfig, TrainConfig, SearchSpace, SynthSpec) worden al bij
het inlezen gecontroleerd.
"""

import logging
import math
from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from config import settings as defaults
from src.tssnet.data import SynthSpec
from src.tssnet.data.preprocessing import split_lengths
from src.tssnet.models import parse_kernel_mode
from src.tssnet.training import SearchSpace, TrainConfig
from src.tssnet.transform import TemporalTensorConfig
from src.tssnet.utils.errors import TSSNetError

logger = logging.getLogger(__name__)


class ConfigFileError(ValueError):
    """Fout in de opmaak van een configbestand of --set vlag."""

    def __init__(self, source: str, line: int, text: str):
        self.source = source
        self.line = line
        self.text = text
        super().__init__(f"{source}:{line}: verwacht 'key = value', kreeg '{text}'")


def _float_list(text: str) -> list[float]:
    return [float(item) for item in text.split(",") if item.strip()]


def _int_list(text: str) -> list[int]:
    return [int(item) for item in text.split(",") if item.strip()]


def _str_list(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


class RunConfig(BaseSettings):
    """Alle instellingen van een run; elke key heeft een default."""

    model_config = SettingsConfigDict(
        env_prefix="TSSNET_",
        env_file=".env.tssnet",
        env_file_encoding="utf-8",
        extra="forbid",
    )

    # Data
    data: str = Field(default="", description="CSV pad; leeg = synthetische reeks")
    dataset_name: str = Field(default="", description="Naam in rapporten; leeg = afgeleid")
    has_header: bool = True
    delimiter: str = ","
    columns: str = Field(default="", description="Kolomselectie, komma-gescheiden namen of indices")
    scaling: Literal["none", "max-abs", "min-max", "z-score"] = defaults.DEFAULT_SCALING
    split: str = Field(default=",".join(str(r) for r in defaults.SPLIT_RATIOS), description="train,valid,test")
    input_size: int = Field(default=defaults.DEFAULT_INPUT_SIZE, ge=1)
    horizon: int = Field(default=defaults.DEFAULT_HORIZON, ge=1)
    sample_stride: int = Field(default=defaults.DEFAULT_SAMPLE_STRIDE, ge=1)
    eval_split: Literal["train", "valid", "test"] = "test"

    # Synthetische data
    synth_function: str = "sine"
    synth_length: int = 2000
    synth_step: float = defaults.SYNTH_STEP
    synth_noise: float = 0.0
    synth_seed: int = 0
    synth_slope: float = 1.0
    synth_features: int = Field(default=1, ge=1)
    synth_phase_step: float = math.pi / 4

    # Transformatie
    window: int = defaults.DEFAULT_WINDOW
    stride: int = defaults.DEFAULT_STRIDE
    dilation: int = defaults.DEFAULT_DILATION
    padding: int = defaults.DEFAULT_PADDING
    padding_mode: Literal["zero", "edge-replicate", "local-mean"] = defaults.DEFAULT_PADDING_MODE
    local_mean_k: int = 1
    slice_count_mode: Literal["conservative", "maximal"] = "conservative"

    # Model
    model: Literal["tssnet", "cnn1d", "persistence"] = "tssnet"
    kernel_width: int = Field(default=defaults.DEFAULT_KERNEL_WIDTH, ge=1)
    kernel_height_mode: str = "full-stack"
    kernel_height: int = Field(default=defaults.DEFAULT_KERNEL_HEIGHT, ge=1)
    hidden_multiplier: int = Field(default=defaults.DEFAULT_HIDDEN_MULTIPLIER, ge=2)
    cnn_kernel_height: int = Field(default=0, ge=0, description="0 = m")
    persistence_mode: Literal["last-value", "seasonal"] = "last-value"
    persistence_period: int = Field(default=24, ge=1)
    model_seed: int = 0
    checkpoint: str = Field(default="", description="Checkpoint voor evaluate/predict/gradcheck; leeg = out_dir/model.json")

    # Training
    optimizer: Literal["adam", "sgd"] = defaults.DEFAULT_OPTIMIZER
    lr: float = defaults.DEFAULT_LEARNING_RATE
    clip: float = defaults.GRADIENT_CLIP
    batch_size: int = defaults.DEFAULT_BATCH_SIZE
    max_epochs: int = defaults.DEFAULT_MAX_EPOCHS
    patience: int = defaults.DEFAULT_PATIENCE
    seed: int = 0
    corr_variant: Literal["pearson", "paper-literal"] = "pearson"

    # Search en sweep
    search_window: str = "{},{}".format(*defaults.SEARCH_WINDOW_RANGE)
    search_stride: str = "{},{}".format(*defaults.SEARCH_STRIDE_RANGE)
    search_lr: str = "{},{}".format(*defaults.SEARCH_LR_RANGE)
    search_budget: int = defaults.SEARCH_BUDGET
    search_seed: int = 0
    sweep_inputs: str = ",".join(str(v) for v in defaults.SWEEP_INPUT_SIZES)
    sweep_horizons: str = ",".join(str(v) for v in defaults.SWEEP_HORIZONS)
    jobs: int = Field(default=1, ge=1)

    # Feature maps en ACF
    featuremap_functions: str = "sine,sine-plus-linear,x-times-sine,sine-plus-half-linear"
    featuremap_noise: str = ",".join(str(v) for v in defaults.SYNTH_NOISE_LEVELS)
    featuremap_kernel_mode: str = "fixed({})".format(defaults.DEFAULT_KERNEL_HEIGHT)
    acf_max_lag: int = Field(default=48, ge=1)

    # Gradient audit
    gradcheck_epsilon: float = defaults.GRADCHECK_EPSILON
    gradcheck_tolerance: float = 1e-4

    # Uitvoer
    out_dir: str = str(defaults.RUNS_DIR)
    log_level: str = defaults.LOG_LEVEL
    debug: bool = defaults.DEBUG

    @field_validator("log_level")
    @classmethod
    def check_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Onbekend log level '{v}'")
        return level

    @model_validator(mode="after")
    def check_domain_configs(self) -> "RunConfig":
        """Bouw alle domeinconfigs één keer zodat fouten direct zichtbaar zijn."""
        try:
            self.transform_config()
            self.train_config()
            self.search_space()
            self.synth_spec()
            if self.data:
                # Alleen de ratios; de lengte van een CSV is pas bekend na het laden
                split_lengths(10_000, self.split_ratios)
            else:
                split_lengths(self.synth_length, self.split_ratios)
            parse_kernel_mode(self.kernel_height_mode, self.kernel_height)
            parse_kernel_mode(self.featuremap_kernel_mode, self.kernel_height)
            for function in self.featuremap_function_list:
                for noise in self.featuremap_noise_list:
                    SynthSpec(function=function, noise=noise)
            if not self.sweep_input_list or not self.sweep_horizon_list:
                raise ValueError("sweep_inputs en sweep_horizons mogen niet leeg zijn")
        except TSSNetError as e:
            # pydantic maakt hier een ValidationError van
            raise ValueError(str(e)) from e
        return self

    # ------------------------------------------------------------------
    # Afgeleide waarden
    # ------------------------------------------------------------------
    @property
    def split_ratios(self) -> tuple[float, float, float]:
        return tuple(_float_list(self.split))

    @property
    def column_list(self) -> list[str]:
        return _str_list(self.columns)

    @property
    def sweep_input_list(self) -> list[int]:
        return _int_list(self.sweep_inputs)

    @property
    def sweep_horizon_list(self) -> list[int]:
        return _int_list(self.sweep_horizons)

    @property
    def featuremap_function_list(self) -> list[str]:
        return _str_list(self.featuremap_functions)

    @property
    def featuremap_noise_list(self) -> list[float]:
        return _float_list(self.featuremap_noise)

    @property
    def out_path(self) -> Path:
        return Path(self.out_dir)

    @property
    def checkpoint_path(self) -> Path:
        return Path(self.checkpoint) if self.checkpoint else self.out_path / "model.json"

    def transform_config(self, **overrides) -> TemporalTensorConfig:
        values = dict(
            window=self.window,
            stride=self.stride,
            dilation=self.dilation,
            padding=self.padding,
            padding_mode=self.padding_mode,
            local_mean_k=self.local_mean_k,
            slice_count_mode=self.slice_count_mode,
        )
        values.update(overrides)
        return TemporalTensorConfig(**values)

    def train_config(self) -> TrainConfig:
        return TrainConfig(
            optimizer=self.optimizer,
            lr=self.lr,
            clip=self.clip,
            batch_size=self.batch_size,
            max_epochs=self.max_epochs,
            patience=self.patience,
            seed=self.seed,
            corr_variant=self.corr_variant,
        )

    def search_space(self) -> SearchSpace:
        windows = _int_list(self.search_window)
        strides = _int_list(self.search_stride)
        lrs = _float_list(self.search_lr)
        if len(windows) != 2 or len(strides) != 2 or len(lrs) != 2:
            raise ValueError("search_window, search_stride en search_lr verwachten 'min,max'")
        return SearchSpace(
            window_range=tuple(windows),
            stride_range=tuple(strides),
            lr_range=tuple(lrs),
            budget=self.search_budget,
            seed=self.search_seed,
        )

    def synth_spec(self, **overrides) -> SynthSpec:
        values = dict(
            function=self.synth_function,
            length=self.synth_length,
            step=self.synth_step,
            noise=self.synth_noise,
            seed=self.synth_seed,
            slope=self.synth_slope,
        )
        values.update(overrides)
        return SynthSpec(**values)

    def header(self) -> dict:
        """Volledige configuratie voor de kop van elk uitvoerbestand."""
        return self.model_dump()


def parse_config_file(path: str | Path) -> dict[str, str]:
    """
    Lees een "key = value" bestand; lege regels en # commentaar worden
    overgeslagen.

    Raises:
        ConfigFileError: Bij een regel zonder '='
        OSError: Als het bestand niet te lezen is
    """
    values = {}
    with open(path, "r", encoding="utf-8") as f:
        for number, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigFileError(str(path), number, line)
            key, value = line.split("=", 1)
            values[key.strip()] = value.strip()
    return values


def parse_overrides(items: list[str]) -> dict[str, str]:
    """Zet ["key=value", ...] om naar een dict."""
    values = {}
    for index, item in enumerate(items or [], start=1):
        if "=" not in item:
            raise ConfigFileError("--set", index, item)
        key, value = item.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def load_run_config(config_file: str | None = None, overrides: list[str] | None = None, **flags) -> RunConfig:
    """
    Bouw een RunConfig uit bestand, --set vlaggen en losse CLI vlaggen.

    Init-waarden gaan in pydantic-settings boven environment variables,
    dus bestand en vlaggen winnen van TSSNET_* variabelen.
    """
    values: dict = {}
    if config_file:
        values.update(parse_config_file(config_file))
    values.update(parse_overrides(overrides or []))
    values.update({key: value for key, value in flags.items() if value is not None})
    config = RunConfig(**values)
    logger.debug("RunConfig geladen (%d expliciete keys)", len(values))
    return config
