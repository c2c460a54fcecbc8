# -*- coding: utf-8 -*-
#
# export.py
#
# This file is part of ommlab.
#
# Copyright (C) 2026 The ommlab developers
#
# ommlab is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# ommlab is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with ommlab.  If not, see <http://www.gnu.org/licenses/>.

import csv
import json
import os
from dataclasses import asdict
from typing import List, Sequence, Union

from .records import (
    RECORD_FIELDS,
    ScalingFit,
    TrialRecord,
    VerificationReport,
)


FORMATS = ["csv", "json"]


def _format_of(path: str, fmt: str = None) -> str:
    if fmt is None:
        fmt = os.path.splitext(path)[1].lstrip(".").lower()
    if fmt not in FORMATS:
        raise ValueError(f"Unknown export format '{fmt}', choose from {FORMATS}")
    return fmt


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, (list, tuple)):
        return " ".join(_csv_cell(v) for v in value)
    return str(value)


def _rows(obj) -> List[dict]:
    if isinstance(obj, (TrialRecord, ScalingFit)):
        obj = [obj]
    if isinstance(obj, VerificationReport):
        return [asdict(check) for check in obj.checks]
    rows = list(obj)
    if not all(isinstance(row, (TrialRecord, ScalingFit)) for row in rows):
        raise TypeError("Expected trial records, scaling fits or a verification report")
    return [row.to_dict() for row in rows]


def _fit_rows(fits: List[dict]) -> List[dict]:
    """One table row per (fit, n)"""
    rows = []
    for fit in fits:
        for n, mean, var, count in zip(
            fit["n_values"], fit["means"], fit["variances"], fit["counts"]
        ):
            rows.append(
                {
                    "algorithm": fit["algorithm"],
                    "law": fit["law"],
                    "statistic": fit["statistic"],
                    "n": n,
                    "mean": mean,
                    "variance": var,
                    "count": count,
                    "ratio": fit["ratio"],
                    "passed": fit["passed"],
                }
            )
    return rows


def export(
    obj: Union[Sequence[TrialRecord], Sequence[ScalingFit], VerificationReport],
    path: str,
    fmt: str = None,
):
    """
    Write records, scaling fits or a verification report as CSV or JSON.

    CSV has a header row and LF line endings, trial records use the column
    order of `RECORD_FIELDS`, missing values are empty cells and booleans
    "true"/"false". JSON mirrors the dataclass fields.

    Parameters
    ----------
    obj:
        A list of `TrialRecord`, a list of `ScalingFit` or a
        `VerificationReport`
    path: str
    fmt: str, optional
        "csv" or "json", taken from the file extension by default
    """
    fmt = _format_of(path, fmt)
    try:
        with open(path, "w", encoding="utf-8", newline="") as file:
            if fmt == "json":
                data = obj.to_dict() if isinstance(obj, VerificationReport) else _rows(obj)
                json.dump(data, file, indent=2)
                file.write("\n")
                return
            rows = _rows(obj)
            if len(rows) > 0 and "law" in rows[0]:
                rows = _fit_rows(rows)
            if len(rows) == 0 or "trial" in rows[0]:
                fields = RECORD_FIELDS
            else:
                fields = list(rows[0])
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(fields)
            for row in rows:
                writer.writerow([_csv_cell(row[key]) for key in fields])
    except OSError as err:
        raise IOError(f"Could not write {path}: {err}") from err


def _parse_csv_row(row: dict) -> TrialRecord:
    data = {}
    for key in RECORD_FIELDS:
        if key not in row:
            raise KeyError(f"Trial record misses the field '{key}'")
        cell = row[key]
        if key == "algorithm":
            data[key] = cell
        elif key == "censored":
            if cell not in ("true", "false"):
                raise ValueError(f"Cannot interpret censored='{cell}'")
            data[key] = cell == "true"
        elif cell == "":
            data[key] = None
        elif key == "wall_ms":
            data[key] = float(cell)
        else:
            data[key] = int(cell)
    return TrialRecord(**data)


def import_records(path: str, fmt: str = None) -> List[TrialRecord]:
    """Read trial records written by `export`"""
    fmt = _format_of(path, fmt)
    try:
        with open(path, "r", encoding="utf-8", newline="") as file:
            if fmt == "json":
                return [TrialRecord.from_dict(data) for data in json.load(file)]
            return [_parse_csv_row(row) for row in csv.DictReader(file)]
    except OSError as err:
        raise IOError(f"Could not read {path}: {err}") from err
