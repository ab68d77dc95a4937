"""
Data module: ingestie, schaling, splitsen, windowing, synthetische
reeksen, ACF en export.
"""

from .acf import acf, acf_matrix, dominant_lag
from .export import (
    export_acf,
    export_feature_maps,
    export_predictions,
    export_series,
    export_temporal_tensor,
    read_csv_frame,
    to_grayscale,
    write_csv,
    write_pgm,
)
from .loader import CsvOptions, DataLoadError, EmptyFileError, ParseError, load_csv
from .preprocessing import (
    SCALING_METHODS,
    fit_scaler,
    inverse_scale,
    make_windows,
    scale,
    split_chronological,
    split_lengths,
    window_count,
)
from .series import ScalerRecord, SeriesMatrix, WindowedDataset
from .synthetic import SYNTH_FUNCTIONS, SynthSpec, synth_generate, synth_multivariate

__all__ = [
    "SeriesMatrix",
    "WindowedDataset",
    "ScalerRecord",
    "CsvOptions",
    "load_csv",
    "DataLoadError",
    "ParseError",
    "EmptyFileError",
    "SCALING_METHODS",
    "fit_scaler",
    "scale",
    "inverse_scale",
    "split_lengths",
    "split_chronological",
    "window_count",
    "make_windows",
    "SynthSpec",
    "SYNTH_FUNCTIONS",
    "synth_generate",
    "synth_multivariate",
    "acf",
    "acf_matrix",
    "dominant_lag",
    "write_csv",
    "read_csv_frame",
    "export_series",
    "export_acf",
    "export_feature_maps",
    "export_temporal_tensor",
    "export_predictions",
    "write_pgm",
    "to_grayscale",
]
