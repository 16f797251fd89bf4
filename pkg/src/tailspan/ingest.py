"""
Series Ingestion Module

Loads one real (or real + imaginary) column of a delimited text file into a Signal.
Rows are taken in file order as positions 0..N-1 of Z_N; no date parsing or
resampling is done. Missing cells are an error unless interpolation is enabled.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from .errors import IngestError
from .signal import Signal

# Import config for ingestion defaults
try:
    from config import get_config
    HAS_CONFIG = True
except ImportError:
    HAS_CONFIG = False

logger = logging.getLogger(__name__)

ColumnRef = Union[str, int]


def _get_missing_tokens() -> List[str]:
    """Get missing-value tokens from config or use defaults."""
    if HAS_CONFIG:
        try:
            return list(get_config().ingest.missing_tokens)
        except Exception:
            pass
    return ["", "NA", "N/A", "NaN", "nan", "null"]


@dataclass(frozen=True)
class SeriesFile:
    """Where and how to read one series."""
    path: Path
    value_column: ColumnRef = 0
    label_column: Optional[ColumnRef] = None
    imag_column: Optional[ColumnRef] = None
    delimiter: str = ","
    has_header: bool = True
    interpolate_missing: bool = False

    @classmethod
    def from_config(cls, path: Union[str, Path], value_column: ColumnRef = 0, **overrides) -> "SeriesFile":
        """Build a SeriesFile with ingestion defaults taken from config.yaml."""
        defaults = {}
        if HAS_CONFIG:
            try:
                ingest = get_config().ingest
                defaults = {
                    "delimiter": ingest.delimiter,
                    "has_header": ingest.has_header,
                    "interpolate_missing": ingest.interpolate_missing,
                }
            except Exception:
                pass
        defaults.update({k: v for k, v in overrides.items() if v is not None})
        return cls(path=Path(path), value_column=value_column, **defaults)


@dataclass(frozen=True)
class LoadedSeries:
    """A loaded Signal plus the labels of its rows."""
    signal: Signal
    labels: Tuple[str, ...]
    source: SeriesFile
    interpolated: Tuple[int, ...] = ()

    @property
    def name(self) -> str:
        return self.source.path.stem


def _resolve_column(frame: pd.DataFrame, ref: ColumnRef, cfg: SeriesFile) -> str:
    """Map a column name or 0-based position to exactly one column label."""
    columns = list(frame.columns)
    if isinstance(ref, int) or (isinstance(ref, str) and ref.isdigit() and ref not in columns):
        position = int(ref)
        if not 0 <= position < len(columns):
            raise IngestError(f"column position {position} out of range (file has {len(columns)} columns)",
                              path=str(cfg.path))
        return columns[position]
    matches = [c for c in columns if str(c) == ref]
    if len(matches) != 1:
        raise IngestError(f"column '{ref}' matches {len(matches)} columns; available: {columns}",
                          path=str(cfg.path))
    return matches[0]


def _parse_column(cells: pd.Series, cfg: SeriesFile, missing_tokens: List[str],
                  first_line: int) -> Tuple[np.ndarray, List[int]]:
    """Parse cells to floats; returns values (NaN where missing) and missing row numbers."""
    values = np.empty(len(cells), dtype=np.float64)
    missing: List[int] = []
    for row, cell in enumerate(cells):
        text = "" if cell is None or (isinstance(cell, float) and np.isnan(cell)) else str(cell).strip()
        if text in missing_tokens:
            values[row] = np.nan
            missing.append(row)
            continue
        try:
            if "_" in text:
                raise ValueError(text)
            number = float(text)
        except ValueError:
            raise IngestError(f"row {row}: cannot parse '{text}' as a number",
                              path=str(cfg.path), line=first_line + row) from None
        if not np.isfinite(number):
            raise IngestError(f"row {row}: value '{text}' is not finite",
                              path=str(cfg.path), line=first_line + row)
        values[row] = number
    return values, missing


def _interpolate(values: np.ndarray, missing: List[int], cfg: SeriesFile) -> np.ndarray:
    """Linear interpolation between finite neighbours; ends take the nearest value."""
    known = np.flatnonzero(~np.isnan(values))
    if known.size == 0:
        raise IngestError("every value is missing; nothing to interpolate from", path=str(cfg.path))
    filled = values.copy()
    gaps = np.asarray(missing, dtype=np.int64)
    filled[gaps] = np.interp(gaps, known, values[known])
    return filled


def load_series(cfg: SeriesFile) -> LoadedSeries:
    """
    Load a series file into a Signal.

    Args:
        cfg: File location and column selection

    Returns:
        LoadedSeries with the signal in file order and aligned labels

    Raises:
        IngestError: Unreadable or empty file, bad column, unparseable or missing cell
    """
    path = Path(cfg.path)
    if not path.is_file():
        raise IngestError("file not found or not readable", path=str(path))

    try:
        frame = pd.read_csv(
            path,
            sep=cfg.delimiter,
            header=0 if cfg.has_header else None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError:
        raise IngestError("file is empty", path=str(path)) from None
    except (pd.errors.ParserError, UnicodeDecodeError, OSError) as e:
        raise IngestError(f"cannot read file: {e}", path=str(path)) from None

    if not cfg.has_header:
        frame.columns = list(range(frame.shape[1]))
    frame.columns = [str(c) for c in frame.columns]

    # Trailing blank lines are not data rows
    blank = frame.isna() | (frame.apply(lambda col: col.astype(str).str.strip()) == "")
    while len(frame) and bool(blank.iloc[-1].all()):
        frame = frame.iloc[:-1]
        blank = blank.iloc[:-1]

    if len(frame) == 0:
        raise IngestError("file has no data rows", path=str(path))

    first_line = 2 if cfg.has_header else 1
    missing_tokens = _get_missing_tokens()

    value_col = _resolve_column(frame, cfg.value_column, cfg)
    real, missing = _parse_column(frame[value_col], cfg, missing_tokens, first_line)

    imag = None
    imag_missing: List[int] = []
    if cfg.imag_column is not None:
        imag_col = _resolve_column(frame, cfg.imag_column, cfg)
        imag, imag_missing = _parse_column(frame[imag_col], cfg, missing_tokens, first_line)

    all_missing = sorted(set(missing) | set(imag_missing))
    if all_missing and not cfg.interpolate_missing:
        row = all_missing[0]
        raise IngestError(f"row {row}: missing value ({len(all_missing)} missing in total; "
                          f"enable interpolation to fill them)",
                          path=str(path), line=first_line + row)
    if missing:
        real = _interpolate(real, missing, cfg)
    if imag is not None and imag_missing:
        imag = _interpolate(imag, imag_missing, cfg)
    if all_missing:
        logger.warning(f"Interpolated {len(all_missing)} missing value(s) in {path.name}")

    values = real if imag is None else real + 1j * imag

    if cfg.label_column is not None:
        label_col = _resolve_column(frame, cfg.label_column, cfg)
        labels = tuple("" if pd.isna(v) else str(v).strip() for v in frame[label_col])
    else:
        labels = tuple(str(i) for i in range(len(frame)))

    signal = Signal(values)
    logger.info(f"Loaded {signal.n} values from {path.name} (column '{value_col}')")
    return LoadedSeries(signal=signal, labels=labels, source=cfg, interpolated=tuple(all_missing))
