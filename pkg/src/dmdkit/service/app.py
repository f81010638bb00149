"""FastAPI service exposing the fit/forecast/synth pipeline.

The service is stateless: every request carries its data (CSV text or a
preset name) and receives rendered artifact documents back, so results
are byte-identical whether produced here or by the local pipeline.

Error mapping: configuration and data problems return 400, numerical
failures 500, both with a structured ``{"detail": {"kind", "message"}}``
body. Request-shape violations keep FastAPI's standard 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__, pipeline
from ..errors import ConfigError, DataError, NumericalError
from ..synthetic import get_preset, preset_names
from .schemas import (
    ArtifactsResponse,
    EvaluateConfig,
    FitConfig,
    ForecastConfig,
    HealthResponse,
    PresetInfo,
    PresetsResponse,
    ScenariosResponse,
    SelftestConfig,
    SynthConfig,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="dmdkit",
        description=(
            "Fit a best-fit linear propagator to multichannel time series, "
            "inspect its modes, and produce short-term forecasts."
        ),
        version=__version__,
    )

    @app.exception_handler(ConfigError)
    @app.exception_handler(DataError)
    async def _bad_request(request: Request, exc: Exception):
        kind = "config" if isinstance(exc, ConfigError) else "data"
        return JSONResponse(
            status_code=400,
            content={"detail": {"kind": kind, "message": str(exc)}},
        )

    @app.exception_handler(NumericalError)
    async def _numerical_failure(request: Request, exc: Exception):
        return JSONResponse(
            status_code=500,
            content={"detail": {"kind": "numerical", "message": str(exc)}},
        )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(version=__version__)

    @app.get("/presets", response_model=PresetsResponse)
    def presets() -> PresetsResponse:
        infos = []
        for name in preset_names():
            p = get_preset(name)
            infos.append(
                PresetInfo(
                    name=p.name,
                    description=p.description,
                    n_channels=len(p.spec.channel_names),
                    channels=list(p.spec.channel_names),
                    n_steps=p.spec.m,
                    dt=p.spec.dt,
                    train_len=p.train_len,
                    test_len=p.test_len,
                    reference_period=p.reference_period,
                    demo_nonlinearity=p.demo_nonlinearity,
                )
            )
        return PresetsResponse(presets=infos)

    @app.get("/scenarios", response_model=ScenariosResponse)
    def scenarios() -> ScenariosResponse:
        return ScenariosResponse(scenarios=list(pipeline.selftest_scenarios()))

    @app.post("/synth", response_model=ArtifactsResponse)
    def synth(cfg: SynthConfig) -> ArtifactsResponse:
        bundle = pipeline.run_synth(cfg)
        return ArtifactsResponse(files=bundle.files, summary=bundle.summary)

    @app.post("/fit", response_model=ArtifactsResponse)
    def fit(cfg: FitConfig) -> ArtifactsResponse:
        bundle = pipeline.run_fit(cfg)
        return ArtifactsResponse(files=bundle.files, summary=bundle.summary)

    @app.post("/forecast", response_model=ArtifactsResponse)
    def forecast(cfg: ForecastConfig) -> ArtifactsResponse:
        bundle = pipeline.run_forecast(cfg)
        return ArtifactsResponse(files=bundle.files, summary=bundle.summary)

    @app.post("/evaluate", response_model=ArtifactsResponse)
    def evaluate(cfg: EvaluateConfig) -> ArtifactsResponse:
        bundle = pipeline.run_evaluate(cfg)
        return ArtifactsResponse(files=bundle.files, summary=bundle.summary)

    @app.post("/selftest", response_model=ArtifactsResponse)
    def selftest(cfg: SelftestConfig) -> ArtifactsResponse:
        bundle = pipeline.run_selftest(cfg)
        return ArtifactsResponse(files=bundle.files, summary=bundle.summary)

    return app


app = create_app()
