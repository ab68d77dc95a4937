"""Services die door meerdere commando's gedeeld worden."""

from .pipeline import PreparedData, build_model, load_model, load_series, prepare_splits

__all__ = ["PreparedData", "load_series", "prepare_splits", "build_model", "load_model"]
