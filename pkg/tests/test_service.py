import json

import numpy as np
import pytest
from fastapi.testclient import TestClient

from dmdkit import __version__
from dmdkit.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


class TestMeta:
    def test_health(self, client):
        doc = client.get("/health").json()
        assert doc == {"status": "ok", "version": __version__}

    def test_presets(self, client):
        doc = client.get("/presets").json()
        names = [p["name"] for p in doc["presets"]]
        assert names == ["5415m-like", "kcs-like"]
        kcs = doc["presets"][1]
        assert kcs["n_channels"] == 13
        assert kcs["train_len"] == 132

    def test_scenarios(self, client):
        doc = client.get("/scenarios").json()
        assert "linear" in doc["scenarios"]


class TestSynth:
    def test_deterministic_bytes(self, client):
        body = {"preset": "kcs-like", "seed": 1, "noise_std": 0.01}
        a = client.post("/synth", json=body).json()
        b = client.post("/synth", json=body).json()
        assert a["files"]["data.csv"] == b["files"]["data.csv"]
        assert a["summary"]["n_steps"] == 264

    def test_unknown_preset_maps_to_400(self, client):
        response = client.post("/synth", json={"preset": "nope"})
        assert response.status_code == 400
        assert response.json()["detail"]["kind"] == "config"

    def test_request_shape_error_is_422(self, client):
        response = client.post("/synth", json={"preset": "a", "spec": {}})
        assert response.status_code == 422


class TestFitForecastFlow:
    def test_full_flow(self, client):
        fit = client.post("/fit", json={"preset": "kcs-like"}).json()
        assert set(fit["files"]) == {"model.json", "modes.csv", "spectrum.csv"}
        forecast = client.post(
            "/forecast",
            json={"model_json_text": fit["files"]["model.json"]},
        ).json()
        assert set(forecast["files"]) == {"forecast.csv", "report.json"}
        report = json.loads(forecast["files"]["report.json"])
        assert report["normalization"] == "variance"
        assert len(report["trace"]["cumulative_average_nmse"]) == 132

    def test_fit_window_overflow_is_400(self, client):
        response = client.post(
            "/fit", json={"preset": "kcs-like", "train_len": 500}
        )
        assert response.status_code == 400
        assert "train_len" in response.json()["detail"]["message"]

    def test_numerical_failure_is_500(self, client):
        values = np.zeros((40, 2))
        values[:, 0] = 0.9 ** np.arange(40)
        values[0, 1] = 1.0
        lines = ["time,a,b"] + [
            f"{i * 0.1:.17g},{values[i, 0]:.17g},{values[i, 1]:.17g}"
            for i in range(40)
        ]
        text = "\n".join(lines) + "\n"
        fit = client.post(
            "/fit",
            json={
                "csv_text": text,
                "train_len": 20,
                "test_len": 20,
                "derivative_order": 0,
                "standardize": False,
            },
        ).json()
        response = client.post(
            "/forecast",
            json={
                "model_json_text": fit["files"]["model.json"],
                "csv_text": text,
            },
        )
        assert response.status_code == 500
        assert response.json()["detail"]["kind"] == "numerical"

    def test_evaluate_endpoint(self, client):
        synth = client.post("/synth", json={"preset": "kcs-like"}).json()
        data = synth["files"]["data.csv"]
        doc = client.post(
            "/evaluate", json={"pred_csv": data, "truth_csv": data}
        ).json()
        report = json.loads(doc["files"]["report.json"])
        assert report["average_nmse"] == 0.0


class TestSelftestEndpoint:
    def test_linear_scenario(self, client):
        doc = client.post("/selftest", json={"scenario": "linear"}).json()
        assert doc["summary"]["passed"] is True
        assert "selftest_report.json" in doc["files"]

    def test_unknown_scenario_is_400(self, client):
        response = client.post("/selftest", json={"scenario": "zzz"})
        assert response.status_code == 400


class TestRemoteClientAgainstApp:
    def test_remote_client_protocol(self, client):
        # drive the HTTP client through an in-process transport
        from dmdkit.client import RemoteClient
        from dmdkit.config import SynthConfig
        from dmdkit.errors import ConfigError
        from dmdkit.service import app

        rc = RemoteClient("http://testserver")
        rc._client = TestClient(app)
        assert rc.health()["status"] == "ok"
        assert [p["name"] for p in rc.presets()] == ["5415m-like", "kcs-like"]
        bundle = rc.synth(SynthConfig(preset="kcs-like"))
        assert "data.csv" in bundle.files
        with pytest.raises(ConfigError):
            rc.synth(SynthConfig(preset="nope"))
