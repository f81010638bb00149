"""Uniformly sampled multichannel time series: data model, CSV ingestion,
validation and train/test splitting.

The time grid is stored as ``(t0, dt, m)`` rather than a per-row array, so
uniform sampling is structural after construction. Ingestion accepts a
single format: UTF-8 CSV with a mandatory header row, one row per time
step, optionally a leading time column.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import DataError

DEFAULT_REL_TOL = 1e-6


@dataclass(frozen=True)
class TimeSeriesFrame:
    """Immutable m x n block of samples on a uniform time grid.

    Rows are time steps, columns are channels. Row k is the sample taken
    at ``t0 + k * dt``.
    """

    channel_names: tuple[str, ...]
    t0: float
    dt: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2:
            raise DataError(f"values must be 2-D, got shape {values.shape}")
        m, n = values.shape
        names = tuple(str(c) for c in self.channel_names)
        if n < 1 or len(names) != n:
            raise DataError(
                f"channel_names has {len(names)} entries for {n} columns"
            )
        if len(set(names)) != n:
            dupes = sorted({c for c in names if names.count(c) > 1})
            raise DataError(f"duplicate channel names: {dupes}")
        # single-row frames exist only as reconstruction outputs; every
        # ingestion and fitting path enforces its own larger minimum
        if m < 1:
            raise DataError(f"need at least 1 row, got {m}")
        if not float(self.dt) > 0.0:
            raise DataError(f"dt must be positive, got {self.dt}")
        if not np.isfinite(values).all():
            bad = np.argwhere(~np.isfinite(values))[0]
            raise DataError(
                f"non-finite value at row {bad[0]}, channel "
                f"{names[bad[1]]!r}"
            )
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "channel_names", names)
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "dt", float(self.dt))
        object.__setattr__(self, "values", values)

    @property
    def n_steps(self) -> int:
        return self.values.shape[0]

    @property
    def n_channels(self) -> int:
        return self.values.shape[1]

    def times(self) -> np.ndarray:
        """Sample instants ``t0 + k * dt`` for every row."""
        return self.t0 + np.arange(self.n_steps) * self.dt

    def channel(self, name: str) -> np.ndarray:
        try:
            j = self.channel_names.index(name)
        except ValueError:
            raise DataError(f"no channel named {name!r}") from None
        return self.values[:, j]

    def select(self, names: Sequence[str]) -> "TimeSeriesFrame":
        """Return a frame restricted to the given channels, in that order."""
        idx = []
        for name in names:
            if name not in self.channel_names:
                raise DataError(f"no channel named {name!r}")
            idx.append(self.channel_names.index(name))
        return TimeSeriesFrame(
            channel_names=tuple(names),
            t0=self.t0,
            dt=self.dt,
            values=self.values[:, idx],
        )


@dataclass(frozen=True)
class SplitSpec:
    """Lengths of the training and test windows, in snapshots."""

    train_len: int
    test_len: int

    def __post_init__(self):
        if self.train_len < 2:
            raise DataError(f"train_len must be >= 2, got {self.train_len}")
        if self.test_len < 2:
            raise DataError(f"test_len must be >= 2, got {self.test_len}")


@dataclass(frozen=True)
class CsvSpec:
    """Column selection and time-grid directives for :func:`load_csv`.

    channels: data columns to keep, in order; None keeps every non-time
        column in file order.
    time_column: name of the time column, if the file has one.
    dt: explicit sampling interval. May be combined with a time column,
        in which case the two are cross-checked.
    t0: start time used when no time column is present.
    rel_tol: relative tolerance for the uniform-sampling check.
    """

    channels: tuple[str, ...] | None = None
    time_column: str | None = None
    dt: float | None = None
    t0: float = 0.0
    rel_tol: float = DEFAULT_REL_TOL


def validate_uniform_sampling(times, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """Check that sample instants form a uniform grid and return the step.

    The step is the mean difference; every individual step must deviate
    from it by less than ``rel_tol`` times the mean step. Raises
    :class:`DataError` naming the first offending index otherwise.
    """
    t = np.asarray(times, dtype=float)
    if t.ndim != 1 or t.size < 2:
        raise DataError("need at least 2 sample instants")
    steps = np.diff(t)
    if not (steps > 0).all():
        k = int(np.argmax(steps <= 0)) + 1
        raise DataError(f"times not strictly increasing at index {k}")
    mean_step = float(steps.mean())
    dev = np.abs(steps - mean_step)
    # ties resolve to the latest step: earlier samples established the grid
    worst = len(dev) - 1 - int(np.argmax(dev[::-1]))
    if dev[worst] >= rel_tol * mean_step:
        raise DataError(
            f"non-uniform sampling at index {worst + 1}: step "
            f"{steps[worst]:.17g} vs mean {mean_step:.17g}"
        )
    return mean_step


def load_csv(path, spec: CsvSpec | None = None) -> TimeSeriesFrame:
    """Read a CSV file into a :class:`TimeSeriesFrame`.

    The file must be comma-separated with a header row of channel names.
    Parse failures report the 1-based data row and the column name.
    """
    path = Path(path)
    if not path.is_file():
        raise DataError(f"no such file: {path}")
    return parse_csv(path.read_text(encoding="utf-8"), spec, source=str(path))


def parse_csv(
    text: str, spec: CsvSpec | None = None, source: str = "<csv>"
) -> TimeSeriesFrame:
    """Parse CSV text in the ingestion format; ``source`` labels errors."""
    spec = spec or CsvSpec()
    path = source
    reader = csv.reader(text.splitlines())
    try:
        header = next(reader)
    except StopIteration:
        raise DataError(f"{path}: empty file") from None
    header = [h.strip() for h in header]
    rows = [row for row in reader if row]

    if len(rows) < 2:
        raise DataError(f"{path}: need at least 2 data rows, got {len(rows)}")

    if spec.time_column is not None and spec.time_column not in header:
        raise DataError(f"{path}: missing time column {spec.time_column!r}")
    if spec.channels is not None:
        missing = [c for c in spec.channels if c not in header]
        if missing:
            raise DataError(f"{path}: missing columns {missing}")
        names = tuple(spec.channels)
    else:
        names = tuple(c for c in header if c != spec.time_column)

    col_of = {name: header.index(name) for name in header}

    def parse(row_idx: int, row: list[str], name: str) -> float:
        j = col_of[name]
        if j >= len(row):
            raise DataError(
                f"{path}: row {row_idx + 1} has {len(row)} fields, "
                f"column {name!r} missing"
            )
        try:
            return float(row[j])
        except ValueError:
            raise DataError(
                f"{path}: non-numeric value {row[j]!r} at row {row_idx + 1}, "
                f"column {name!r}"
            ) from None

    values = np.empty((len(rows), len(names)))
    for i, row in enumerate(rows):
        for k, name in enumerate(names):
            values[i, k] = parse(i, row, name)

    if spec.time_column is not None:
        times = np.array(
            [parse(i, row, spec.time_column) for i, row in enumerate(rows)]
        )
        dt_file = validate_uniform_sampling(times, spec.rel_tol)
        t0 = float(times[0])
        if spec.dt is not None and abs(dt_file - spec.dt) >= spec.rel_tol * spec.dt:
            raise DataError(
                f"{path}: time column implies dt={dt_file:.17g} but config "
                f"says dt={spec.dt:.17g}"
            )
        dt = spec.dt if spec.dt is not None else dt_file
    elif spec.dt is not None:
        dt, t0 = spec.dt, spec.t0
    else:
        raise DataError(f"{path}: no time column and no explicit dt")

    return TimeSeriesFrame(channel_names=names, t0=t0, dt=dt, values=values)


def write_csv(frame: TimeSeriesFrame, path, time_column: str = "time") -> None:
    """Write a frame in the ingestion format with a leading time column.

    Numbers are rendered with 17 significant digits so a read-back is
    value-identical in double precision.
    """
    path = Path(path)
    path.write_text(render_csv(frame, time_column), encoding="utf-8")


def render_csv(frame: TimeSeriesFrame, time_column: str = "time") -> str:
    if time_column in frame.channel_names:
        raise DataError(f"time column {time_column!r} collides with a channel")
    times = frame.times()
    lines = [",".join([time_column, *frame.channel_names])]
    for i in range(frame.n_steps):
        fields = [f"{times[i]:.17g}"]
        fields += [f"{v:.17g}" for v in frame.values[i]]
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


def split_train_test(
    frame: TimeSeriesFrame, spec: SplitSpec
) -> tuple[TimeSeriesFrame, TimeSeriesFrame]:
    """Split into leading training rows and the following test rows.

    Training takes rows ``[0, train_len)``, test takes rows
    ``[train_len, train_len + test_len)``; the test frame's t0 is moved
    to the start of its window.
    """
    total = spec.train_len + spec.test_len
    if total > frame.n_steps:
        raise DataError(
            f"train_len + test_len = {total} exceeds frame length "
            f"{frame.n_steps}"
        )
    train = TimeSeriesFrame(
        channel_names=frame.channel_names,
        t0=frame.t0,
        dt=frame.dt,
        values=frame.values[: spec.train_len],
    )
    test = TimeSeriesFrame(
        channel_names=frame.channel_names,
        t0=frame.t0 + spec.train_len * frame.dt,
        dt=frame.dt,
        values=frame.values[spec.train_len : total],
    )
    return train, test
