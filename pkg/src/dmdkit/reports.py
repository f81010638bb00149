"""Deterministic rendering of report artifacts.

All numbers are written with 17 significant digits, enough to reproduce
the exact double on read-back, so artifact files round trip losslessly
and identical runs produce byte-identical bytes.
"""

from __future__ import annotations

import json
import math
from typing import Sequence

import numpy as np

from .dmd import ModeRow
from .timeseries import TimeSeriesFrame


def fmt(x: float) -> str:
    """Render a float with 17 significant digits."""
    return f"{float(x):.17g}"


def dumps_json(doc) -> str:
    """Canonical JSON text: two-space indent, insertion order, no NaN."""
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _nan_to_none(x: float):
    return None if math.isnan(x) else x


def render_modes_csv(
    rows: Sequence[ModeRow], channel_names: Sequence[str]
) -> str:
    """Modal table, one mode per row, sorted by descending participation.

    The trailing columns hold the eigenvector component magnitude on each
    channel. Rows whose eigenvalue magnitude is too small for a
    continuous frequency carry "nan" in the frequency columns.
    """
    header = [
        "mode",
        "participation",
        "re_lambda",
        "im_lambda",
        "re_omega",
        "im_omega",
        "frequency_hz",
        "growth_rate",
        "re_b",
        "im_b",
        "abs_b",
    ] + [f"abs_phi_{c}" for c in channel_names]
    lines = [",".join(header)]
    for row in rows:
        fields = [
            str(row.index),
            fmt(row.participation),
            fmt(row.lam.real),
            fmt(row.lam.imag),
            fmt(row.omega.real),
            fmt(row.omega.imag),
            fmt(row.frequency_hz),
            fmt(row.growth_rate),
            fmt(row.amplitude.real),
            fmt(row.amplitude.imag),
            fmt(abs(row.amplitude)),
        ] + [fmt(v) for v in row.component_magnitudes]
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


def render_spectrum_csv(rows: Sequence[ModeRow]) -> str:
    """Eigenvalue / continuous-frequency scatter data, one mode per row."""
    lines = ["mode,re_lambda,im_lambda,re_omega,im_omega"]
    for row in rows:
        lines.append(
            ",".join(
                [
                    str(row.index),
                    fmt(row.lam.real),
                    fmt(row.lam.imag),
                    fmt(row.omega.real),
                    fmt(row.omega.imag),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def render_long_csv(series: Sequence[tuple[str, TimeSeriesFrame]]) -> str:
    """Plot-ready long format: time, channel, value, series.

    Series appear in the given order; within a series, channels in frame
    order, each swept over time.
    """
    lines = ["time,channel,value,series"]
    for label, frame in series:
        times = frame.times()
        for j, name in enumerate(frame.channel_names):
            col = frame.values[:, j]
            for i in range(frame.n_steps):
                lines.append(f"{fmt(times[i])},{name},{fmt(col[i])},{label}")
    return "\n".join(lines) + "\n"


def complex_array_doc(arr: np.ndarray) -> dict:
    """Complex vector/matrix as JSON-safe parallel re/im lists (NaN -> null)."""
    re = np.real(arr)
    im = np.imag(arr)
    if arr.ndim == 1:
        return {
            "re": [_nan_to_none(float(v)) for v in re],
            "im": [_nan_to_none(float(v)) for v in im],
        }
    return {
        "re": [[_nan_to_none(float(v)) for v in row] for row in re],
        "im": [[_nan_to_none(float(v)) for v in row] for row in im],
    }


def complex_array_from_doc(doc: dict) -> np.ndarray:
    def restore(part):
        if isinstance(part[0], list):
            return np.array(
                [[math.nan if v is None else v for v in row] for row in part]
            )
        return np.array([math.nan if v is None else v for v in part])

    return restore(doc["re"]) + 1j * restore(doc["im"])


def real_array_doc(arr: np.ndarray) -> list:
    if arr.ndim == 1:
        return [float(v) for v in arr]
    return [[float(v) for v in row] for row in arr]
