"""
CSV ingestie: één rij per tijdstap, één kolom per feature.

De CSV wordt met pandas gelezen en getransponeerd naar een m×T SeriesMatrix.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from config.settings import logger
from ..utils.errors import TSSNetError
from .series import SeriesMatrix


class DataLoadError(TSSNetError):
    """Exception wanneer een databestand niet gelezen kan worden."""

    def __init__(self, path, reason: str):
        self.path = str(path)
        self.reason = reason
        super().__init__(f"Kan '{self.path}' niet lezen: {reason}")


class ParseError(TSSNetError):
    """
    Exception voor een niet-numerieke cel.

    row en column zijn 1-based en tellen zoals in het bestand zelf,
    dus inclusief een eventuele header regel en commentaarregels.
    """

    def __init__(self, row: int, column: int, value: str):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(f"Niet-numerieke waarde '{value}' op rij {row}, kolom {column}.")


class EmptyFileError(TSSNetError):
    """Exception wanneer een CSV geen datarijen bevat."""

    pass


@dataclass(frozen=True)
class CsvOptions:
    """
    Opties voor load_csv.

    Attributes:
        has_header: Eerste regel bevat kolomnamen
        delimiter: Scheidingsteken (standaard komma)
        select_columns: Optionele kolomselectie, namen of 0-based indices
    """

    has_header: bool = True
    delimiter: str = ","
    select_columns: Optional[tuple] = None
    encoding: str = "utf-8"


def _resolve_columns(frame: pd.DataFrame, select) -> list[int]:
    if not select:
        return list(range(frame.shape[1]))
    names = [str(c) for c in frame.columns]
    positions = []
    for item in select:
        if isinstance(item, (int, np.integer)) or (isinstance(item, str) and item.isdigit() and item not in names):
            index = int(item)
            if not 0 <= index < frame.shape[1]:
                raise DataLoadError("<kolomselectie>", f"kolomindex {index} bestaat niet")
            positions.append(index)
        elif str(item) in names:
            positions.append(names.index(str(item)))
        else:
            raise DataLoadError("<kolomselectie>", f"onbekende kolom '{item}'")
    return positions


def _data_line_numbers(path: Path, encoding: str) -> list[int]:
    """1-based regelnummers van regels die pandas als data (of header) leest."""
    with open(path, "r", encoding=encoding) as f:
        return [number for number, line in enumerate(f, start=1) if line.split("#", 1)[0].strip()]


def load_csv(path: str | Path, options: Optional[CsvOptions] = None) -> SeriesMatrix:
    """
    Laad een CSV met tijdstappen als rijen en features als kolommen.

    Regels die met "#" beginnen (de kop van export_series) worden
    overgeslagen; een ParseError noemt toch het regelnummer in het bestand.

    Args:
        path: Pad naar het CSV bestand
        options: Header, scheidingsteken en kolomselectie

    Returns:
        SeriesMatrix van m×T

    Raises:
        DataLoadError: Als het bestand niet bestaat of niet leesbaar is
        EmptyFileError: Als er geen datarijen zijn
        ParseError: Bij een niet-numerieke of niet-eindige cel
    """
    options = options or CsvOptions()
    path = Path(path)
    try:
        frame = pd.read_csv(
            path,
            sep=options.delimiter,
            header=0 if options.has_header else None,
            dtype=str,
            keep_default_na=False,
            encoding=options.encoding,
            skip_blank_lines=True,
            comment="#",
        )
    except pd.errors.EmptyDataError as e:
        logger.error("Leeg bestand: %s", path)
        raise EmptyFileError(f"'{path}' bevat geen data.") from e
    except (OSError, UnicodeDecodeError, pd.errors.ParserError) as e:
        logger.error("Fout bij lezen van %s: %s", path, e)
        raise DataLoadError(path, str(e)) from e

    if frame.shape[0] == 0 or frame.shape[1] == 0:
        logger.error("Geen datarijen in %s", path)
        raise EmptyFileError(f"'{path}' bevat geen datarijen.")

    positions = _resolve_columns(frame, options.select_columns)
    raw = frame.iloc[:, positions]
    numeric = raw.apply(lambda col: pd.to_numeric(col.str.strip(), errors="coerce"))
    values = numeric.to_numpy(dtype=np.float64)

    bad = ~np.isfinite(values)
    if bad.any():
        # Eerste foute cel in bestandsvolgorde (rij voor kolom)
        row, col = np.argwhere(bad)[0]
        file_row = _data_line_numbers(path, options.encoding)[int(row) + (1 if options.has_header else 0)]
        file_col = positions[int(col)] + 1
        value = raw.iat[int(row), int(col)]
        logger.error("Parse fout in %s op rij %d, kolom %d", path, file_row, file_col)
        raise ParseError(file_row, file_col, value)

    if options.has_header:
        names = [str(frame.columns[p]) for p in positions]
    else:
        names = [f"f{p}" for p in positions]

    logger.info("CSV geladen: %s (%d features, %d tijdstappen)", path.name, values.shape[1], values.shape[0])
    return SeriesMatrix(values.T, names)
