"""Run configuration models.

These pydantic models double as the documented schema of the JSON config
file accepted by the CLI (every field can also be set by a flag) and as
the request bodies of the HTTP service. Defaults are resolved against the
data source: preset runs inherit the preset's window geometry and
reference period, CSV runs must state their own.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

Normalization = Literal["variance", "unit"]
BoundaryRows = Literal["trim", "keep"]


class OscillatorModel(BaseModel):
    """One shared oscillator source of a custom surrogate."""

    amplitude: float
    frequency: float = Field(ge=0.0, description="angular frequency, rad/s")
    phase: float = 0.0
    decay: float = 0.0


class SurrogateSpecModel(BaseModel):
    """Custom surrogate definition (alternative to a named preset)."""

    channel_names: list[str]
    oscillators: list[OscillatorModel]
    mixing: list[list[float]]
    m: int = Field(ge=2)
    dt: float = Field(gt=0.0)
    drift: list[list[float]] | None = None
    noise_std: float = Field(default=0.0, ge=0.0)
    nonlinearity: float = 0.0
    seed: int = 0
    t0: float = 0.0


class SynthConfig(BaseModel):
    """Data generation request: a named preset or a full surrogate spec."""

    model_config = ConfigDict(protected_namespaces=())

    preset: str | None = None
    spec: SurrogateSpecModel | None = None
    seed: int = 0
    noise_std: float = Field(default=0.0, ge=0.0)
    nonlinearity: float = 0.0

    @model_validator(mode="after")
    def _one_source(self):
        if (self.preset is None) == (self.spec is None):
            raise ValueError("exactly one of 'preset' or 'spec' is required")
        return self


class FitConfig(BaseModel):
    """Everything needed to go from raw data to a fitted model."""

    model_config = ConfigDict(protected_namespaces=())

    # data source: exactly one
    preset: str | None = None
    csv_text: str | None = Field(
        default=None, description="CSV document in the ingestion format"
    )
    # CSV interpretation
    columns: list[str] | None = None
    time_column: str | None = "time"
    dt: float | None = Field(default=None, gt=0.0)
    t0: float = 0.0
    # preset generation knobs
    seed: int = 0
    noise_std: float = Field(default=0.0, ge=0.0)
    nonlinearity: float = 0.0
    # window geometry; None defers to the preset (or the whole file)
    train_len: int | None = Field(default=None, ge=3)
    test_len: int | None = Field(default=None, ge=0)
    # preprocessing
    derivative_order: Literal[0, 1, 2] = 2
    standardize: bool = True
    boundary_rows: BoundaryRows = "trim"
    # fit
    rcond: float = Field(default=1e-12, gt=0.0)
    # reporting
    normalization: Normalization = "variance"
    reference_period: float | None = Field(default=None, gt=0.0)

    @model_validator(mode="after")
    def _one_source(self):
        if (self.preset is None) == (self.csv_text is None):
            raise ValueError(
                "exactly one of 'preset' or 'csv_text' is required"
            )
        return self


class ForecastConfig(BaseModel):
    """Forecast from a fitted model document, optionally scored on truth.

    The truth source defaults to the model's own provenance (preset runs
    regenerate their data deterministically); CSV-sourced models need
    ``csv_text`` again to evaluate.
    """

    model_config = ConfigDict(protected_namespaces=())

    model_json_text: str
    csv_text: str | None = None
    horizon: int | None = Field(default=None, ge=1)
    evaluate: bool = True
    self_check: bool = False
    normalization: Normalization | None = None
    reference_period: float | None = Field(default=None, gt=0.0)


class EvaluateConfig(BaseModel):
    """Score an existing prediction CSV against a truth CSV."""

    pred_csv: str
    truth_csv: str
    time_column: str | None = "time"
    dt: float | None = Field(default=None, gt=0.0)
    columns: list[str] | None = None
    normalization: Normalization = "variance"
    reference_period: float = Field(default=1.0, gt=0.0)


class SelftestConfig(BaseModel):
    """Run a named end-to-end scenario with built-in checks."""

    scenario: str
    seed: int = 0
