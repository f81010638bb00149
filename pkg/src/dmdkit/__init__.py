"""dmdkit: exact dynamic mode decomposition for multichannel time series.

Fit a best-fit linear propagator between successive snapshots of a
uniformly sampled record, inspect its modes (frequencies, growth rates,
participations, channel patterns) and extrapolate short-term forecasts.
Ships with a preprocessing pipeline (derivative augmentation and
standardization), error metrics, surrogate data generators, a CLI and an
HTTP service.
"""

__version__ = "0.1.0"

from .dmd import (
    DmdModel,
    SnapshotPair,
    amplitudes,
    build_snapshots,
    fit,
    fit_frame,
    forecast,
    modal_participation,
    modal_table,
    mode_components,
    pseudoinverse,
    reconstruct,
)
from .errors import (
    ConfigError,
    DataError,
    DmdkitError,
    DmdkitWarning,
    NumericalError,
)
from .metrics import ErrorReport, nmse, normalize_frame_time, normalize_time
from .preprocess import (
    AugmentationSpec,
    StandardizationParams,
    augment_derivatives,
    destandardize,
    standardize,
)
from .synthetic import (
    LinearSystemSpec,
    Oscillator,
    SurrogatePreset,
    SurrogateSpec,
    gen_linear,
    gen_surrogate,
    get_preset,
    preset_names,
)
from .timeseries import (
    CsvSpec,
    SplitSpec,
    TimeSeriesFrame,
    load_csv,
    parse_csv,
    split_train_test,
    validate_uniform_sampling,
    write_csv,
)

__all__ = [
    "__version__",
    "AugmentationSpec",
    "ConfigError",
    "CsvSpec",
    "DataError",
    "DmdkitError",
    "DmdkitWarning",
    "DmdModel",
    "ErrorReport",
    "LinearSystemSpec",
    "NumericalError",
    "Oscillator",
    "SnapshotPair",
    "SplitSpec",
    "StandardizationParams",
    "SurrogatePreset",
    "SurrogateSpec",
    "TimeSeriesFrame",
    "amplitudes",
    "augment_derivatives",
    "build_snapshots",
    "destandardize",
    "fit",
    "fit_frame",
    "forecast",
    "gen_linear",
    "gen_surrogate",
    "get_preset",
    "load_csv",
    "modal_participation",
    "modal_table",
    "mode_components",
    "nmse",
    "normalize_frame_time",
    "normalize_time",
    "parse_csv",
    "preset_names",
    "pseudoinverse",
    "reconstruct",
    "split_train_test",
    "standardize",
    "validate_uniform_sampling",
    "write_csv",
]
