"""Normalized mean square error between predicted and observed histories.

Per channel, NMSE is the mean squared difference divided by a normalizer:
the observed channel's variance over the window (default), which makes
the constant mean predictor score exactly 1, or unity for data that is
already standardized. The channel average and its running prefix means
("how wrong so far, as a function of horizon") are both reported.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataError
from .timeseries import TimeSeriesFrame

NORMALIZATIONS = ("variance", "unit")


@dataclass(frozen=True)
class ErrorReport:
    """Per-channel and channel-averaged NMSE plus its horizon trace.

    ``cumulative_average`` holds, at step i, the channel-averaged NMSE
    computed over prediction rows [0, i]; its final entry equals
    ``average``. ``per_step_average`` holds the channel-averaged
    normalized squared error of row i alone. ``horizon`` is the elapsed
    prediction time at each step, divided by ``reference_period``.
    """

    channel_names: tuple[str, ...]
    per_channel: np.ndarray
    average: float
    cumulative_average: np.ndarray
    per_step_average: np.ndarray
    horizon: np.ndarray
    normalization: str
    reference_period: float


def nmse(
    pred: TimeSeriesFrame,
    truth: TimeSeriesFrame,
    normalization: str = "variance",
    reference_period: float = 1.0,
) -> ErrorReport:
    """Compare a prediction against observed truth on the same grid.

    Both frames must agree in shape, channel names, t0 and dt. Variance
    normalization uses the truth channel's population variance over the
    compared window and rejects constant truth channels.
    """
    if normalization not in NORMALIZATIONS:
        raise DataError(
            f"normalization must be one of {NORMALIZATIONS}, got "
            f"{normalization!r}"
        )
    if reference_period <= 0:
        raise DataError(
            f"reference_period must be positive, got {reference_period}"
        )
    if pred.channel_names != truth.channel_names:
        raise DataError(
            f"channel mismatch: {pred.channel_names} vs {truth.channel_names}"
        )
    if pred.values.shape != truth.values.shape:
        raise DataError(
            f"shape mismatch: {pred.values.shape} vs {truth.values.shape}"
        )
    if pred.t0 != truth.t0 or pred.dt != truth.dt:
        raise DataError(
            f"time grid mismatch: (t0={pred.t0}, dt={pred.dt}) vs "
            f"(t0={truth.t0}, dt={truth.dt})"
        )

    if normalization == "variance":
        mean = truth.values.mean(axis=0)
        norm = ((truth.values - mean) ** 2).mean(axis=0)
        if not (norm > 0).all():
            j = int(np.argmax(~(norm > 0)))
            raise DataError(
                f"truth channel {truth.channel_names[j]!r} has zero "
                "variance; use unit normalization"
            )
    else:
        norm = np.ones(truth.n_channels)

    se = (pred.values - truth.values) ** 2 / norm
    per_channel = se.mean(axis=0)
    steps = np.arange(1, pred.n_steps + 1)
    cumulative = (np.cumsum(se, axis=0) / steps[:, None]).mean(axis=1)
    per_step = se.mean(axis=1)
    horizon = steps * pred.dt / reference_period

    return ErrorReport(
        channel_names=pred.channel_names,
        per_channel=per_channel,
        average=float(per_channel.mean()),
        cumulative_average=cumulative,
        per_step_average=per_step,
        horizon=horizon,
        normalization=normalization,
        reference_period=float(reference_period),
    )


def normalize_time(times, reference_period: float) -> np.ndarray:
    """Relabel a time axis in units of a reference period."""
    if reference_period <= 0:
        raise DataError(
            f"reference_period must be positive, got {reference_period}"
        )
    return np.asarray(times, dtype=float) / reference_period


def normalize_frame_time(
    frame: TimeSeriesFrame, reference_period: float
) -> TimeSeriesFrame:
    """Same frame with t0 and dt expressed in reference periods."""
    if reference_period <= 0:
        raise DataError(
            f"reference_period must be positive, got {reference_period}"
        )
    return TimeSeriesFrame(
        channel_names=frame.channel_names,
        t0=frame.t0 / reference_period,
        dt=frame.dt / reference_period,
        values=frame.values,
    )
