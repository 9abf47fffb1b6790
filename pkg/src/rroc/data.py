"""Dataset container and CSV ingestion.

Input format: a UTF-8 CSV with a header row, an ``actual`` column and either
a single ``predicted`` column or one ``predicted:<model-id>`` column per
model. Decimal point notation, no locale handling. Unrelated columns are
ignored. Row order is preserved.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Dict

import numpy as np

from .core import error_vector
from .errors import ConfigError, DataError

__all__ = ["Dataset", "DEFAULT_MODEL_ID", "load_predictions", "write_predictions"]

ACTUAL_COLUMN = "actual"
PREDICTED_COLUMN = "predicted"
PREDICTED_PREFIX = "predicted:"
DEFAULT_MODEL_ID = "model"


@dataclass(frozen=True)
class Dataset:
    """Actual values plus one prediction vector per model id."""

    actual: np.ndarray
    predicted: Dict[str, np.ndarray]

    def __post_init__(self):
        a = np.asarray(self.actual, dtype=float)
        if a.ndim != 1 or a.size < 1:
            raise DataError("actual values must be a nonempty 1-D sequence")
        if not np.all(np.isfinite(a)):
            raise DataError("actual values contain non-finite entries")
        if not self.predicted:
            raise DataError("dataset needs at least one model")
        object.__setattr__(self, "actual", a)
        cleaned = {}
        for model_id, p in self.predicted.items():
            p = np.asarray(p, dtype=float)
            if p.shape != a.shape:
                raise DataError(
                    f"model {model_id!r} has {p.size} predictions for {a.size} actuals"
                )
            if not np.all(np.isfinite(p)):
                raise DataError(f"model {model_id!r} has non-finite predictions")
            cleaned[model_id] = p
        object.__setattr__(self, "predicted", cleaned)

    @property
    def n(self) -> int:
        return int(self.actual.size)

    @property
    def model_ids(self):
        return list(self.predicted)

    def errors(self, model_id: str) -> np.ndarray:
        if model_id not in self.predicted:
            raise ConfigError(f"unknown model id {model_id!r}")
        return error_vector(self.predicted[model_id], self.actual)


def _model_columns(header) -> Dict[str, str]:
    """Map model id -> column name from a CSV header."""
    columns = {}
    for name in header:
        if name == PREDICTED_COLUMN:
            columns[DEFAULT_MODEL_ID] = name
        elif name.startswith(PREDICTED_PREFIX):
            model_id = name[len(PREDICTED_PREFIX):]
            if not model_id:
                raise ConfigError(f"empty model id in column {name!r}")
            if model_id in columns:
                raise ConfigError(f"duplicate model id {model_id!r} in header")
            columns[model_id] = name
    return columns


def load_predictions(path) -> Dataset:
    """Parse a predictions CSV into a Dataset."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise DataError(f"{path}: no rows")
        if ACTUAL_COLUMN not in reader.fieldnames:
            raise ConfigError(f"{path}: missing required column {ACTUAL_COLUMN!r}")
        columns = _model_columns(reader.fieldnames)
        if not columns:
            raise ConfigError(
                f"{path}: need a {PREDICTED_COLUMN!r} or {PREDICTED_PREFIX}<model-id> column"
            )

        actual = []
        predicted = {model_id: [] for model_id in columns}
        for row_number, row in enumerate(reader, start=1):
            actual.append(_parse_cell(row, ACTUAL_COLUMN, path, row_number))
            for model_id, column in columns.items():
                predicted[model_id].append(_parse_cell(row, column, path, row_number))
        if not actual:
            raise DataError(f"{path}: no rows")
    return Dataset(actual=np.array(actual), predicted={k: np.array(v) for k, v in predicted.items()})


def _parse_cell(row, column: str, path, row_number: int) -> float:
    raw = row.get(column)
    if raw is None or raw.strip() == "":
        raise DataError(f"{path}: row {row_number}: missing value in column {column!r}")
    try:
        value = float(raw)
    except ValueError:
        raise DataError(
            f"{path}: row {row_number}: unparseable number {raw!r} in column {column!r}"
        ) from None
    if not np.isfinite(value):
        raise DataError(f"{path}: row {row_number}: non-finite value in column {column!r}")
    return value


def write_predictions(dataset: Dataset, path) -> None:
    """Write a Dataset as CSV; floats use repr so re-ingestion is lossless."""
    model_ids = dataset.model_ids
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([ACTUAL_COLUMN] + [PREDICTED_PREFIX + m for m in model_ids])
        for i in range(dataset.n):
            writer.writerow(
                [repr(float(dataset.actual[i]))]
                + [repr(float(dataset.predicted[m][i])) for m in model_ids]
            )
