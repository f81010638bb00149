"""Channel standardization and derivative augmentation.

Derivatives are appended as extra channels named ``<base>_d1`` and
``<base>_d2``. All stencils are 4th-order accurate:

    first derivative, interior   (f[i-2] - 8 f[i-1] + 8 f[i+1] - f[i+2]) / (12 dt)
    second derivative, interior  (-f[i-2] + 16 f[i-1] - 30 f[i] + 16 f[i+1] - f[i+2]) / (12 dt^2)

The first two and last two rows use one-sided stencils of the same order
so the output keeps the input's length and time grid. Both families are
exact on polynomials up to degree 4 at every row.

Standardization uses the population convention (divisor m) so that a
standardized channel has sample variance exactly 1 under the same
convention. The transform and its inverse are the only places channel
units enter or leave the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataError
from .timeseries import TimeSeriesFrame

# One-sided / skewed 4th-order weights (numerators over a denominator of 12).
# Rows: stencil for output row 0 and row 1; end rows use the mirrored
# tables. First-derivative mirrors flip sign, second-derivative mirrors
# do not.
_D1_INTERIOR = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_D1_ROW0 = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0
_D1_ROW1 = np.array([-3.0, -10.0, 18.0, -6.0, 1.0]) / 12.0

_D2_INTERIOR = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
_D2_ROW0 = np.array([45.0, -154.0, 214.0, -156.0, 61.0, -10.0]) / 12.0
_D2_ROW1 = np.array([10.0, -15.0, -4.0, 14.0, -6.0, 1.0]) / 12.0

#: Rows at each end of a differentiated frame that were produced by
#: one-sided stencils rather than the central ones.
BOUNDARY_ROWS = 2


@dataclass(frozen=True)
class StandardizationParams:
    """Per-channel mean and standard deviation of the fitted transform."""

    channel_names: tuple[str, ...]
    mean: np.ndarray
    std: np.ndarray

    def __post_init__(self):
        mean = np.asarray(self.mean, dtype=float)
        std = np.asarray(self.std, dtype=float)
        n = len(self.channel_names)
        if mean.shape != (n,) or std.shape != (n,):
            raise DataError("one (mean, std) pair per channel required")
        if not (std > 0).all():
            j = int(np.argmax(~(std > 0)))
            raise DataError(
                f"non-positive std for channel {self.channel_names[j]!r}"
            )
        mean = mean.copy()
        std = std.copy()
        mean.setflags(write=False)
        std.setflags(write=False)
        object.__setattr__(self, "channel_names", tuple(self.channel_names))
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "std", std)

    @classmethod
    def identity(cls, channel_names) -> "StandardizationParams":
        n = len(channel_names)
        return cls(tuple(channel_names), np.zeros(n), np.ones(n))


@dataclass(frozen=True)
class AugmentationSpec:
    """How many time-derivative orders to append (0, 1 or 2)."""

    max_derivative_order: int = 2
    stencil_order: int = 4

    def __post_init__(self):
        if self.max_derivative_order not in (0, 1, 2):
            raise DataError(
                f"max_derivative_order must be 0, 1 or 2, got "
                f"{self.max_derivative_order}"
            )
        if self.stencil_order != 4:
            raise DataError("only 4th-order stencils are supported")

    def min_rows(self) -> int:
        # central width 5; the one-sided second-derivative stencil needs 6
        if self.max_derivative_order == 2:
            return 6
        if self.max_derivative_order == 1:
            return 5
        return 2


def standardize(
    frame: TimeSeriesFrame,
) -> tuple[TimeSeriesFrame, StandardizationParams]:
    """Shift and scale every channel to zero mean and unit variance.

    Uses the population variance (divisor m). A constant channel is an
    error; drop it with column selection before calling.
    """
    values = frame.values
    mean = values.mean(axis=0)
    std = np.sqrt(((values - mean) ** 2).mean(axis=0))
    if not (std > 0).all():
        j = int(np.argmax(~(std > 0)))
        raise DataError(
            f"channel {frame.channel_names[j]!r} has zero variance; "
            "constant channels cannot be standardized"
        )
    params = StandardizationParams(frame.channel_names, mean, std)
    out = TimeSeriesFrame(
        channel_names=frame.channel_names,
        t0=frame.t0,
        dt=frame.dt,
        values=(values - mean) / std,
    )
    return out, params


def destandardize(
    frame: TimeSeriesFrame, params: StandardizationParams
) -> TimeSeriesFrame:
    """Invert :func:`standardize`: ``value * std + mean`` per channel."""
    if params.channel_names != frame.channel_names:
        raise DataError(
            "standardization params were fitted on different channels: "
            f"{params.channel_names} vs {frame.channel_names}"
        )
    return TimeSeriesFrame(
        channel_names=frame.channel_names,
        t0=frame.t0,
        dt=frame.dt,
        values=frame.values * params.std + params.mean,
    )


def apply_standardization(
    frame: TimeSeriesFrame, params: StandardizationParams
) -> TimeSeriesFrame:
    """Apply previously fitted params: ``(value - mean) / std`` per channel."""
    if params.channel_names != frame.channel_names:
        raise DataError(
            "standardization params were fitted on different channels: "
            f"{params.channel_names} vs {frame.channel_names}"
        )
    return TimeSeriesFrame(
        channel_names=frame.channel_names,
        t0=frame.t0,
        dt=frame.dt,
        values=(frame.values - params.mean) / params.std,
    )


def _differentiate(values: np.ndarray, dt: float, order: int) -> np.ndarray:
    """Columnwise 4th-order finite difference of the given order (1 or 2)."""
    m = values.shape[0]
    out = np.empty_like(values)
    if order == 1:
        interior, w0, w1, flip = _D1_INTERIOR, _D1_ROW0, _D1_ROW1, -1.0
    else:
        interior, w0, w1, flip = _D2_INTERIOR, _D2_ROW0, _D2_ROW1, 1.0
    width = len(w0)

    # interior rows via a sliding dot product
    for k, c in enumerate(interior):
        if c != 0.0:
            seg = values[k : k + m - 4]
            if k == 0:
                acc = c * seg
            else:
                acc = acc + c * seg
    out[2 : m - 2] = acc

    out[0] = w0 @ values[:width]
    out[1] = w1 @ values[:width]
    out[m - 2] = flip * (w1[::-1] @ values[m - width :])
    out[m - 1] = flip * (w0[::-1] @ values[m - width :])
    return out / dt**order


def augment_derivatives(
    frame: TimeSeriesFrame, spec: AugmentationSpec | None = None
) -> TimeSeriesFrame:
    """Append finite-difference derivative channels to a frame.

    With ``max_derivative_order == d`` the output has ``n * (1 + d)``
    channels; derivative channels keep the base channel's position block
    ordering: all ``_d1`` channels follow the base block, then all
    ``_d2`` channels.
    """
    spec = spec or AugmentationSpec()
    if frame.n_steps < spec.min_rows():
        raise DataError(
            f"need at least {spec.min_rows()} rows for order-"
            f"{spec.max_derivative_order} augmentation, got {frame.n_steps}"
        )
    if spec.max_derivative_order == 0:
        return frame

    blocks = [frame.values]
    names = list(frame.channel_names)
    d1 = _differentiate(frame.values, frame.dt, 1)
    blocks.append(d1)
    names += [f"{c}_d1" for c in frame.channel_names]
    if spec.max_derivative_order == 2:
        blocks.append(_differentiate(frame.values, frame.dt, 2))
        names += [f"{c}_d2" for c in frame.channel_names]

    return TimeSeriesFrame(
        channel_names=tuple(names),
        t0=frame.t0,
        dt=frame.dt,
        values=np.hstack(blocks),
    )
