"""
Export van reeksen, ACF's, temporal tensors, voorspellingen en feature
maps naar CSV en PGM.

Elke CSV begint met commentaarregels "# key = value" met de run
configuratie, gevolgd door een header rij. Komma als scheidingsteken,
LF regeleinden.
"""

from pathlib import Path
from typing import Mapping, Optional

import numpy as np
import pandas as pd

from config.settings import logger
from ..utils.errors import ShapeMismatchError
from .series import SeriesMatrix


def _header_lines(header: Optional[Mapping]) -> str:
    if not header:
        return ""
    return "".join(f"# {key} = {value}\n" for key, value in header.items())


def write_csv(frame: pd.DataFrame, path: str | Path, header: Optional[Mapping] = None) -> Path:
    """
    Schrijf een DataFrame met optionele "# key = value" kop.

    Args:
        frame: De data; de kolomnamen worden de header rij
        path: Doelbestand (de map wordt aangemaakt)
        header: Configuratie die bovenaan als commentaar komt

    Returns:
        Het geschreven pad
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(_header_lines(header))
        frame.to_csv(f, index=False, lineterminator="\n")
    logger.debug("CSV geschreven: %s", path)
    return path


def read_csv_frame(path: str | Path) -> pd.DataFrame:
    """Lees een door write_csv geschreven bestand terug (commentaar wordt overgeslagen)."""
    return pd.read_csv(path, comment="#")


def export_series(x: SeriesMatrix, path: str | Path, header: Optional[Mapping] = None) -> Path:
    """Schrijf een reeks in hetzelfde schema als load_csv leest."""
    frame = pd.DataFrame(x.values.T, columns=x.feature_names)
    return write_csv(frame, path, header)


def export_acf(r: np.ndarray, path: str | Path, header: Optional[Mapping] = None) -> Path:
    """Twee kolommen: lag, r."""
    frame = pd.DataFrame({"lag": np.arange(len(r)), "r": r})
    return write_csv(frame, path, header)


def to_grayscale(matrix: np.ndarray) -> np.ndarray:
    """Min-max naar 0..255; een constante map wordt helemaal 0."""
    lo, hi = float(matrix.min()), float(matrix.max())
    if hi == lo:
        return np.zeros(matrix.shape, dtype=np.uint8)
    scaled = (matrix - lo) / (hi - lo) * 255.0
    return np.clip(np.rint(scaled), 0, 255).astype(np.uint8)


def write_pgm(matrix: np.ndarray, path: str | Path) -> Path:
    """Schrijf een 2D matrix als 8-bit binaire PGM (P5)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    pixels = to_grayscale(np.asarray(matrix, dtype=np.float64))
    height, width = pixels.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        f.write(pixels.tobytes(order="C"))
    return path


def export_feature_maps(
    maps: np.ndarray,
    out_dir: str | Path,
    prefix: str = "kernel",
    header: Optional[Mapping] = None,
    index_key: str = "kernel",
) -> list[Path]:
    """
    Eén CSV matrix en één PGM per kernel.

    Args:
        maps: l×H×W array met een 2D map per kernel
        out_dir: Doelmap
        prefix: Bestandsnaam prefix
        header: Configuratie voor de CSV kop
        index_key: Kopregel met de index van de map

    Returns:
        Alle geschreven paden, per kernel eerst de CSV dan de PGM
    """
    out_dir = Path(out_dir)
    written = []
    for index, plane in enumerate(np.asarray(maps)):
        frame = pd.DataFrame(plane, columns=[f"c{j}" for j in range(plane.shape[1])])
        kernel_header = dict(header or {})
        kernel_header[index_key] = index
        written.append(write_csv(frame, out_dir / f"{prefix}_{index}.csv", kernel_header))
        written.append(write_pgm(plane, out_dir / f"{prefix}_{index}.pgm"))
    logger.info("%d feature maps geëxporteerd naar %s", len(maps), out_dir)
    return written


def export_temporal_tensor(stack: np.ndarray, out_dir: str | Path, header: Optional[Mapping] = None) -> list[Path]:
    """
    Schrijf een m×ω×o temporal tensor als één ω×o CSV en PGM per feature.

    Rij w, kolom c{i} bevat slice i op positie w, zodat de PGM dezelfde
    oriëntatie heeft als de feature maps van het fixed kernel mode.
    """
    return export_feature_maps(stack, out_dir, prefix="transform", header=header, index_key="feature")


def export_predictions(
    truth: np.ndarray,
    predictions: np.ndarray,
    target_starts: np.ndarray,
    feature_names: list[str],
    path: str | Path,
    header: Optional[Mapping] = None,
) -> Path:
    """
    Schrijf waarheid en voorspelling per sample, stap en feature (lang formaat).

    Args:
        truth: N×m×h doelwaarden
        predictions: N×m×h voorspellingen
        target_starts: Tijdindex van de eerste doelstap per sample (lengte N)
        feature_names: m namen
        path: Doelbestand
        header: Configuratie voor de CSV kop

    Returns:
        Het geschreven pad; kolommen sample, t, step, feature, truth, prediction
    """
    truth = np.asarray(truth, dtype=np.float64)
    predictions = np.asarray(predictions, dtype=np.float64)
    if truth.ndim != 3:
        raise ShapeMismatchError("Waarheid moet N×m×h zijn", 3, truth.ndim)
    if truth.shape != predictions.shape:
        raise ShapeMismatchError("Waarheid en voorspelling", truth.shape, predictions.shape)
    n, m, h = truth.shape
    sample, feature, step = np.meshgrid(np.arange(n), np.arange(m), np.arange(h), indexing="ij")
    frame = pd.DataFrame({
        "sample": sample.ravel(),
        "t": (np.asarray(target_starts)[sample] + step).ravel(),
        "step": step.ravel() + 1,
        "feature": np.asarray(feature_names, dtype=object)[feature.ravel()],
        "truth": truth.ravel(),
        "prediction": predictions.ravel(),
    })
    return write_csv(frame, path, header)
