"""Tests voor RMSE, CORR en evaluate_model."""

import math

import numpy as np
import pytest

from src.tssnet.data import SeriesMatrix, make_windows
from src.tssnet.metrics import (
    AllDegenerateError,
    EvalReport,
    config_fingerprint,
    corr,
    corr_details,
    evaluate_model,
    rmse,
)
from src.tssnet.models import PersistenceForecaster, build_tssnet
from src.tssnet.transform import TemporalTensorConfig
from src.tssnet.utils.errors import EmptyInputError, InvalidConfigError, ShapeMismatchError


def test_rmse_examples():
    y = np.array([[[1.0, 2.0]]])
    assert rmse(y, y) == 0.0
    assert rmse(y, np.array([[[1.0, 4.0]]])) == pytest.approx(2.0, abs=1e-9)


def test_rmse_is_mean_of_per_sample_roots():
    # Per-sample kwadratensom 4 en 16 -> wortels 2 en 4 -> gemiddelde 3
    y = np.zeros((2, 1, 2))
    yhat = np.array([[[2.0, 0.0]], [[0.0, 4.0]]])
    assert rmse(y, yhat) == pytest.approx(3.0, abs=1e-9)


def test_rmse_symmetry_and_constant_shift(rng):
    y = rng.standard_normal((5, 3, 4))
    yhat = rng.standard_normal((5, 3, 4))
    assert rmse(y, yhat) == pytest.approx(rmse(yhat, y), abs=1e-12)
    assert rmse(y, y + 0.5) == pytest.approx(0.5 * math.sqrt(12), abs=1e-9)


def test_rmse_errors():
    with pytest.raises(ShapeMismatchError):
        rmse(np.zeros((1, 2, 2)), np.zeros((1, 2, 3)))
    with pytest.raises(EmptyInputError):
        rmse(np.zeros((0, 2, 2)), np.zeros((0, 2, 2)))


def test_pearson_examples():
    y = np.array([[[1.0, 2.0, 3.0]]])
    assert corr(y, y) == 1.0
    assert corr(y, 2 * y + 3) == 1.0
    assert corr(y, -y + 4) == pytest.approx(-1.0, abs=1e-9)


def test_pearson_bounded(rng):
    for _ in range(20):
        y = rng.standard_normal((4, 2, 3))
        yhat = rng.standard_normal((4, 2, 3))
        assert -1.0 <= corr(y, yhat) <= 1.0


def test_literal_variant_centres_per_time_step():
    # m=2, h=2; gemiddelden over de features per tijdstap: 2 en 3.5
    y = np.array([[[1.0, 2.0], [3.0, 5.0]]])
    # a = [[-1, -1.5], [1, 1.5]]: teller Σa² = 6.5, noemer sqrt(Σa⁴) = sqrt(12.125)
    assert corr(y, y, "paper-literal") == pytest.approx(6.5 / math.sqrt(12.125), abs=1e-9)
    assert corr(y, y, "paper-literal") == pytest.approx(1.8667, abs=1e-4)
    # ŷ gecentreerd: b = [[0, -2], [0, 2]]; Σab = 6, Σa²b² = 18
    yhat = np.array([[[2.0, 0.0], [2.0, 4.0]]])
    assert corr(y, yhat, "paper-literal") == pytest.approx(6.0 / math.sqrt(18.0), abs=1e-9)


def test_literal_variant_single_feature_is_degenerate():
    y = np.array([[[1.0, 2.0, 3.0]]])
    with pytest.raises(AllDegenerateError):
        corr(y, y, "paper-literal")


def test_corr_averages_over_samples():
    y = np.array([[[1.0, 2.0, 3.0]], [[1.0, 2.0, 3.0]]])
    yhat = np.array([[[1.0, 2.0, 3.0]], [[3.0, 2.0, 1.0]]])
    assert corr(y, yhat) == pytest.approx(0.0, abs=1e-12)


def test_corr_skips_degenerate_samples():
    y = np.array([[[1.0, 2.0, 3.0]], [[5.0, 5.0, 5.0]]])
    result = corr_details(y, y.copy())
    assert result.value == 1.0
    assert result.used == 1
    assert result.skipped == 1


def test_corr_all_degenerate():
    y = np.ones((3, 1, 4))
    with pytest.raises(AllDegenerateError) as exc:
        corr(y, y)
    assert exc.value.n_samples == 3


def test_corr_unknown_variant():
    y = np.array([[[1.0, 2.0]]])
    with pytest.raises(InvalidConfigError):
        corr(y, y, "spearman")


def test_persistence_on_constant_series():
    series = SeriesMatrix(np.full((2, 30), 4.0))
    dataset = make_windows(series, 10, 3)
    report = evaluate_model(PersistenceForecaster(2, 10, 3), dataset)
    assert report.rmse == 0.0
    assert math.isnan(report.corr)
    assert report.skipped == len(dataset)


def test_evaluate_matches_manual_metrics(rng):
    dataset = make_windows(SeriesMatrix(rng.standard_normal((2, 60))), 20, 4)
    model = build_tssnet(2, 20, 4, TemporalTensorConfig(window=4, stride=2), k=2, seed=1)
    report = evaluate_model(model, dataset, dataset_name="ruis", seed=1)
    predictions = model.predict(dataset.inputs)
    assert report.rmse == rmse(dataset.targets, predictions)
    assert report.corr == corr(dataset.targets, predictions)
    assert (report.n, report.m, report.h) == (len(dataset), 2, 4)
    row = report.to_row()
    assert list(row) == ["dataset", "model", "T", "h", "ω", "s", "rmse", "corr", "corr_variant", "seed"]
    assert row["model"] == "tssnet"
    assert (row["ω"], row["s"]) == (4, 2)


def test_evaluate_dimension_mismatch(rng):
    dataset = make_windows(SeriesMatrix(rng.standard_normal((2, 60))), 20, 4)
    model = build_tssnet(2, 24, 4, TemporalTensorConfig(window=4, stride=2), k=2)
    with pytest.raises(ShapeMismatchError):
        evaluate_model(model, dataset)


def test_report_fingerprint_is_stable():
    a = EvalReport(rmse=1.0, corr=0.5, corr_variant="pearson", n=1, m=1, h=1)
    assert a.to_dict()["fingerprint"] == ""
    assert config_fingerprint({"b": 1, "a": 2}) == config_fingerprint({"a": 2, "b": 1})
    assert len(config_fingerprint(None)) == 12
