"""RMSE, CORR en modelevaluatie."""

from .evaluation import (
    CORR_VARIANTS,
    REPORT_COLUMNS,
    AllDegenerateError,
    CorrResult,
    EvalReport,
    config_fingerprint,
    corr,
    corr_details,
    evaluate_model,
    rmse,
)

__all__ = [
    "rmse",
    "corr",
    "corr_details",
    "CorrResult",
    "CORR_VARIANTS",
    "AllDegenerateError",
    "EvalReport",
    "REPORT_COLUMNS",
    "config_fingerprint",
    "evaluate_model",
]
