"""Wire-level response models for the HTTP service.

Request bodies reuse the config models from :mod:`dmdkit.config`
directly; responses wrap the artifact bundles produced by the pipeline.
"""

from __future__ import annotations

from pydantic import BaseModel

from ..config import (  # noqa: F401  (re-exported as the request schemas)
    EvaluateConfig,
    FitConfig,
    ForecastConfig,
    SelftestConfig,
    SurrogateSpecModel,
    SynthConfig,
)


class HealthResponse(BaseModel):
    status: str = "ok"
    version: str


class PresetInfo(BaseModel):
    name: str
    description: str
    n_channels: int
    channels: list[str]
    n_steps: int
    dt: float
    train_len: int
    test_len: int
    reference_period: float
    demo_nonlinearity: float


class PresetsResponse(BaseModel):
    presets: list[PresetInfo]


class ScenariosResponse(BaseModel):
    scenarios: list[str]


class ArtifactsResponse(BaseModel):
    """Rendered artifact documents keyed by file name, plus a run summary."""

    files: dict[str, str]
    summary: dict


class ErrorDetail(BaseModel):
    kind: str
    message: str
