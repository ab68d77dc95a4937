"""
Checkpoints als JSON document.

Formaat:
    {
      "version": "tssnet-ckpt-1",
      "arch": {...alle build argumenten...},
      "params": [{"name": ..., "shape": [...], "values": [...]}],
      "seed": ...,
      "scaler": {...} of null,
      "meta": {...}
    }

Floats worden door json als kortste round-trip decimaal geschreven, zodat
laden bit-exact dezelfde parameters oplevert.
"""

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from config import settings
from config.settings import logger
from ..data.loader import DataLoadError
from ..data.series import ScalerRecord
from ..models import LayerStack, build_from_arch
from ..utils.errors import TSSNetError


class CheckpointError(TSSNetError):
    """Basis voor checkpoint fouten."""

    pass


class VersionMismatchError(CheckpointError):
    """Exception voor een onbekende formaatversie."""

    def __init__(self, found, expected: str = settings.CHECKPOINT_VERSION):
        self.found = found
        self.expected = expected
        super().__init__(f"Checkpoint versie '{found}' wordt niet ondersteund (verwacht '{expected}').")


class CorruptCheckpointError(CheckpointError):
    """Exception voor een onleesbaar of inconsistent checkpoint."""

    def __init__(self, path, reason: str):
        self.path = str(path)
        self.reason = reason
        super().__init__(f"Checkpoint '{self.path}' is corrupt: {reason}")


@dataclass(eq=False)
class Checkpoint:
    """In-memory vorm van een checkpoint bestand."""

    arch: dict
    params: dict[str, np.ndarray]
    seed: Optional[int] = None
    scaler: Optional[ScalerRecord] = None
    meta: dict = field(default_factory=dict)
    version: str = settings.CHECKPOINT_VERSION

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "arch": self.arch,
            "params": [
                {"name": name, "shape": list(value.shape), "values": value.ravel().tolist()}
                for name, value in self.params.items()
            ],
            "seed": self.seed,
            "scaler": self.scaler.to_dict() if self.scaler is not None else None,
            "meta": self.meta,
        }

    def build_model(self) -> LayerStack:
        """Herbouw het model en zet de opgeslagen parameters."""
        model = build_from_arch(self.arch)
        model.set_parameters(self.params)
        return model


def make_checkpoint(
    model: LayerStack,
    scaler: Optional[ScalerRecord] = None,
    seed: Optional[int] = None,
    meta: Optional[dict] = None,
) -> Checkpoint:
    params = {name: value.copy() for name, value in model.parameters().items()}
    return Checkpoint(
        arch=dict(model.arch),
        params=params,
        seed=seed if seed is not None else model.arch.get("seed"),
        scaler=scaler,
        meta=dict(meta or {}),
    )


def save_checkpoint(
    model: LayerStack,
    path: str | Path,
    scaler: Optional[ScalerRecord] = None,
    seed: Optional[int] = None,
    meta: Optional[dict] = None,
) -> Path:
    """
    Schrijf een model naar een JSON checkpoint.

    Args:
        model: Het model
        path: Doelbestand
        scaler: Scaler van de trainingsdata, voor predict op ruwe data
        seed: Trainingsseed
        meta: Extra velden (feature namen, dataset, ...)

    Returns:
        Het geschreven pad

    Raises:
        DataLoadError: Als het bestand niet geschreven kan worden
    """
    path = Path(path)
    document = make_checkpoint(model, scaler, seed, meta).to_dict()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            json.dump(document, f, ensure_ascii=False, indent=1)
            f.write("\n")
    except OSError as e:
        logger.error("Checkpoint schrijven mislukt: %s", e)
        raise DataLoadError(path, str(e)) from e
    logger.info("Checkpoint opgeslagen: %s (%d parameters)", path, model.n_parameters())
    return path


def _parse_params(path: Path, entries) -> dict[str, np.ndarray]:
    if not isinstance(entries, list):
        raise CorruptCheckpointError(path, "'params' is geen lijst")
    params = {}
    for entry in entries:
        try:
            name = entry["name"]
            shape = tuple(int(d) for d in entry["shape"])
            values = np.asarray(entry["values"], dtype=np.float64)
        except (KeyError, TypeError, ValueError) as e:
            raise CorruptCheckpointError(path, f"ongeldige parameter entry ({e})") from e
        if values.ndim != 1 or values.size != int(np.prod(shape)):
            raise CorruptCheckpointError(
                path, f"parameter '{name}' heeft {values.size} waarden voor vorm {shape}"
            )
        params[name] = values.reshape(shape)
    return params


def read_checkpoint(path: str | Path) -> Checkpoint:
    """
    Lees en valideer een checkpoint bestand.

    Raises:
        DataLoadError: Als het bestand niet te openen is
        VersionMismatchError: Bij een onbekende versie
        CorruptCheckpointError: Bij kapotte JSON of inconsistente vormen
    """
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        logger.error("Checkpoint lezen mislukt: %s", e)
        raise DataLoadError(path, str(e)) from e

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        logger.error("Checkpoint %s is geen geldige JSON: %s", path, e)
        raise CorruptCheckpointError(path, f"geen geldige JSON ({e.msg})") from e
    if not isinstance(data, dict):
        raise CorruptCheckpointError(path, "document is geen object")

    version = data.get("version")
    if version != settings.CHECKPOINT_VERSION:
        raise VersionMismatchError(version)
    if not isinstance(data.get("arch"), dict):
        raise CorruptCheckpointError(path, "'arch' ontbreekt")

    scaler = None
    if data.get("scaler") is not None:
        try:
            scaler = ScalerRecord.from_dict(data["scaler"])
        except (KeyError, TypeError, ValueError) as e:
            raise CorruptCheckpointError(path, f"ongeldige scaler ({e})") from e

    return Checkpoint(
        arch=data["arch"],
        params=_parse_params(path, data.get("params")),
        seed=data.get("seed"),
        scaler=scaler,
        meta=data.get("meta") or {},
        version=version,
    )


def load_checkpoint(path: str | Path) -> LayerStack:
    """
    Laad een model uit een checkpoint.

    De vormen van de opgeslagen parameters worden vergeleken met de
    architectuur; een verschil geeft CorruptCheckpointError.
    """
    checkpoint = read_checkpoint(path)
    try:
        return checkpoint.build_model()
    except TSSNetError as e:
        raise CorruptCheckpointError(path, f"parameters passen niet bij de architectuur ({e})") from e


def parameter_checksum(model: LayerStack) -> str:
    """sha256 over alle parameterbytes in vaste volgorde."""
    digest = hashlib.sha256()
    for name, value in model.parameters().items():
        digest.update(name.encode("utf-8"))
        digest.update(np.ascontiguousarray(value, dtype=np.float64).tobytes())
    return digest.hexdigest()
