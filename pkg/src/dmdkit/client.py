"""Clients used by the CLI: in-process by default, HTTP when given a URL.

Both speak the same artifact-bundle protocol, so command behavior and
output bytes do not depend on the transport.
"""

from __future__ import annotations

import httpx

from . import pipeline
from .config import (
    EvaluateConfig,
    FitConfig,
    ForecastConfig,
    SelftestConfig,
    SynthConfig,
)
from .errors import ConfigError, DataError, DmdkitError, NumericalError
from .pipeline import ArtifactBundle
from .synthetic import get_preset, preset_names


class LocalClient:
    """Run the pipeline in-process."""

    def health(self) -> dict:
        from . import __version__

        return {"status": "ok", "version": __version__}

    def presets(self) -> list[dict]:
        out = []
        for name in preset_names():
            p = get_preset(name)
            out.append(
                {
                    "name": p.name,
                    "description": p.description,
                    "channels": list(p.spec.channel_names),
                    "n_steps": p.spec.m,
                    "train_len": p.train_len,
                    "test_len": p.test_len,
                    "reference_period": p.reference_period,
                    "demo_nonlinearity": p.demo_nonlinearity,
                }
            )
        return out

    def synth(self, cfg: SynthConfig) -> ArtifactBundle:
        return pipeline.run_synth(cfg)

    def fit(self, cfg: FitConfig) -> ArtifactBundle:
        return pipeline.run_fit(cfg)

    def forecast(self, cfg: ForecastConfig) -> ArtifactBundle:
        return pipeline.run_forecast(cfg)

    def evaluate(self, cfg: EvaluateConfig) -> ArtifactBundle:
        return pipeline.run_evaluate(cfg)

    def selftest(self, cfg: SelftestConfig) -> ArtifactBundle:
        return pipeline.run_selftest(cfg)


class RemoteClient:
    """Talk to a running dmdkit service over HTTP."""

    def __init__(self, base_url: str, timeout: float = 300.0):
        self._client = httpx.Client(
            base_url=base_url.rstrip("/"), timeout=timeout
        )

    def _raise_for_error(self, response: httpx.Response) -> None:
        if response.is_success:
            return
        try:
            detail = response.json().get("detail")
        except ValueError:
            detail = None
        if isinstance(detail, dict):
            kind = detail.get("kind", "")
            message = detail.get("message", response.text)
        else:
            kind = ""
            message = str(detail) if detail is not None else response.text
        if response.status_code in (400, 422):
            raise ConfigError(message) if kind != "data" else DataError(message)
        if kind == "numerical":
            raise NumericalError(message)
        raise DmdkitError(
            f"service returned {response.status_code}: {message}"
        )

    def _post(self, path: str, cfg) -> ArtifactBundle:
        response = self._client.post(path, json=cfg.model_dump())
        self._raise_for_error(response)
        doc = response.json()
        return ArtifactBundle(files=doc["files"], summary=doc["summary"])

    def health(self) -> dict:
        response = self._client.get("/health")
        self._raise_for_error(response)
        return response.json()

    def presets(self) -> list[dict]:
        response = self._client.get("/presets")
        self._raise_for_error(response)
        return response.json()["presets"]

    def synth(self, cfg: SynthConfig) -> ArtifactBundle:
        return self._post("/synth", cfg)

    def fit(self, cfg: FitConfig) -> ArtifactBundle:
        return self._post("/fit", cfg)

    def forecast(self, cfg: ForecastConfig) -> ArtifactBundle:
        return self._post("/forecast", cfg)

    def evaluate(self, cfg: EvaluateConfig) -> ArtifactBundle:
        return self._post("/evaluate", cfg)

    def selftest(self, cfg: SelftestConfig) -> ArtifactBundle:
        return self._post("/selftest", cfg)


def make_client(url: str | None = None):
    return RemoteClient(url) if url else LocalClient()
