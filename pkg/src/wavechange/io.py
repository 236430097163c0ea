"""CSV ingest of monthly counts and columnar CSV output."""

from __future__ import annotations

import csv
import hashlib
import io
import math
from pathlib import Path

import numpy as np

from .errors import InputNotFound, ParseError
from .preprocess import TimeSeries, parse_month, shift_month

HEADER = ("date", "deaths")


def file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _read_text(path) -> str:
    p = Path(path)
    if not p.is_file():
        raise InputNotFound(f"input file not found: {path}")
    try:
        return p.read_bytes().decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not valid UTF-8: {exc}") from None


def read_monthly_csv(path) -> TimeSeries:
    """Parse ``date,deaths`` rows (``YYYY-MM``, one per consecutive month).

    Row numbers in errors count the header as row 1.
    """
    rows = list(csv.reader(io.StringIO(_read_text(path))))
    if not rows or tuple(c.strip().lower() for c in rows[0]) != HEADER:
        raise ParseError("header must be 'date,deaths'", row=1)
    labels, values = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2:
            raise ParseError(f"expected 2 fields, found {len(row)}", row=lineno)
        date, deaths = (c.strip() for c in row)
        try:
            parse_month(date)
        except ValueError:
            raise ParseError(f"bad month {date!r}", row=lineno, field="date") from None
        try:
            value = float(deaths)
        except ValueError:
            value = math.nan
        if not math.isfinite(value):
            raise ParseError(f"bad deaths value {deaths!r}", row=lineno, field="deaths")
        if labels and date != shift_month(labels[-1], 1):
            raise ParseError(
                f"month {date} does not follow {labels[-1]} (gap or disorder)", row=lineno, field="date"
            )
        labels.append(date)
        values.append(value)
    if not values:
        raise ParseError("no data rows")
    return TimeSeries(np.array(values), labels[0])


def read_series(path) -> TimeSeries:
    """Monthly ``date,deaths`` CSV, or a single numeric column with a header."""
    text = _read_text(path)
    first = text.splitlines()[0] if text else ""
    if tuple(c.strip().lower() for c in first.split(",")) == HEADER:
        return read_monthly_csv(path)
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or len(rows[0]) != 1:
        raise ParseError("expected 'date,deaths' or a single-column CSV", row=1)
    values = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        try:
            v = float(row[0])
        except ValueError:
            v = math.nan
        if len(row) != 1 or not math.isfinite(v):
            raise ParseError(f"bad value {row!r}", row=lineno, field=rows[0][0])
        values.append(v)
    if not values:
        raise ParseError("no data rows")
    return TimeSeries(np.array(values))


def write_columns(stream, columns: dict):
    """Write equal-length columns as CSV; floats use repr for round-tripping."""
    names = list(columns)
    lengths = {len(v) for v in columns.values()}
    if len(lengths) > 1:
        raise ValueError("columns differ in length")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(names)
    for row in zip(*(columns[k] for k in names)):
        writer.writerow([repr(float(v)) if isinstance(v, (float, np.floating)) else v for v in row])
