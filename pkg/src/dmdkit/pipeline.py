"""End-to-end runs: data in, artifact documents out.

Every entry point takes a validated config model and returns an
:class:`ArtifactBundle`: a mapping of file names to rendered text plus a
JSON-safe summary. Callers (CLI, HTTP service, tests) decide where the
files land; the pipeline itself never touches the filesystem, which is
what makes runs deterministic and byte-comparable.

Fit protocol: split the record into a training and a test window, append
derivative channels per window, drop the few training rows whose
derivative stencils were one-sided (they follow a slightly different
observation rule than the interior and would contaminate the regression),
standardize over the remaining fit window, and fit the propagator there.
Forecasts extrapolate the modal expansion over the test grid and are
scored against the test window processed with the same transforms.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass

import numpy as np

from . import dmd
from .config import (
    EvaluateConfig,
    FitConfig,
    ForecastConfig,
    SelftestConfig,
    SurrogateSpecModel,
    SynthConfig,
)
from .errors import ConfigError, DataError
from .metrics import ErrorReport, nmse
from .preprocess import (
    BOUNDARY_ROWS,
    AugmentationSpec,
    StandardizationParams,
    apply_standardization,
    augment_derivatives,
    destandardize,
    standardize,
)
from .reports import (
    complex_array_doc,
    complex_array_from_doc,
    dumps_json,
    real_array_doc,
    render_long_csv,
    render_modes_csv,
    render_spectrum_csv,
)
from .synthetic import (
    DEMO_NONLINEARITY,
    LinearSystemSpec,
    Oscillator,
    SurrogateSpec,
    gen_linear,
    gen_surrogate,
    get_preset,
)
from .timeseries import CsvSpec, TimeSeriesFrame, parse_csv, render_csv

MODEL_FORMAT = "dmdkit-model"
MODEL_VERSION = 1


@dataclass(frozen=True)
class ArtifactBundle:
    """Named text documents plus a JSON-safe summary of a run."""

    files: dict[str, str]
    summary: dict


def _surrogate_from_model(spec: SurrogateSpecModel) -> SurrogateSpec:
    return SurrogateSpec(
        channel_names=tuple(spec.channel_names),
        oscillators=tuple(
            Oscillator(o.amplitude, o.frequency, o.phase, o.decay)
            for o in spec.oscillators
        ),
        mixing=np.array(spec.mixing, dtype=float),
        m=spec.m,
        dt=spec.dt,
        drift=None if spec.drift is None else np.array(spec.drift, dtype=float),
        noise_std=spec.noise_std,
        nonlinearity=spec.nonlinearity,
        seed=spec.seed,
        t0=spec.t0,
    )


def run_synth(cfg: SynthConfig) -> ArtifactBundle:
    """Generate a surrogate record and render it in the ingestion format."""
    if cfg.preset is not None:
        preset = get_preset(
            cfg.preset,
            noise_std=cfg.noise_std,
            nonlinearity=cfg.nonlinearity,
            seed=cfg.seed,
        )
        frame = gen_surrogate(preset.spec)
        summary = {
            "preset": preset.name,
            "train_len": preset.train_len,
            "test_len": preset.test_len,
            "reference_period": preset.reference_period,
        }
    else:
        frame = gen_surrogate(_surrogate_from_model(cfg.spec))
        summary = {"preset": None}
    summary.update(
        {
            "n_steps": frame.n_steps,
            "n_channels": frame.n_channels,
            "dt": frame.dt,
            "channels": list(frame.channel_names),
        }
    )
    return ArtifactBundle(files={"data.csv": render_csv(frame)}, summary=summary)


@dataclass(frozen=True)
class ResolvedData:
    """A data source turned into a frame plus resolved window geometry."""

    frame: TimeSeriesFrame
    train_len: int
    test_len: int
    reference_period: float


def _resolve_fit_source(cfg: FitConfig) -> ResolvedData:
    if cfg.preset is not None:
        preset = get_preset(
            cfg.preset,
            noise_std=cfg.noise_std,
            nonlinearity=cfg.nonlinearity,
            seed=cfg.seed,
        )
        frame = gen_surrogate(preset.spec)
        if cfg.columns:
            frame = frame.select(cfg.columns)
        train_len = cfg.train_len if cfg.train_len is not None else preset.train_len
        test_len = cfg.test_len if cfg.test_len is not None else preset.test_len
        ref = (
            cfg.reference_period
            if cfg.reference_period is not None
            else preset.reference_period
        )
    else:
        spec = CsvSpec(
            channels=tuple(cfg.columns) if cfg.columns else None,
            time_column=cfg.time_column,
            dt=cfg.dt,
            t0=cfg.t0,
        )
        frame = parse_csv(cfg.csv_text, spec, source="input csv")
        test_len = cfg.test_len if cfg.test_len is not None else 0
        train_len = (
            cfg.train_len
            if cfg.train_len is not None
            else frame.n_steps - test_len
        )
        ref = cfg.reference_period if cfg.reference_period is not None else 1.0

    if test_len == 1:
        raise ConfigError("test_len must be 0 or at least 2")
    if train_len + test_len > frame.n_steps:
        raise ConfigError(
            f"train_len + test_len = {train_len + test_len} exceeds the "
            f"record length {frame.n_steps}"
        )
    return ResolvedData(frame, train_len, test_len, ref)


def _window(frame: TimeSeriesFrame, start: int, length: int) -> TimeSeriesFrame:
    return TimeSeriesFrame(
        channel_names=frame.channel_names,
        t0=frame.t0 + start * frame.dt,
        dt=frame.dt,
        values=frame.values[start : start + length],
    )


def _effective_config(cfg: FitConfig, data: ResolvedData) -> dict:
    doc = cfg.model_dump()
    if doc.get("csv_text"):
        doc["csv_sha256"] = hashlib.sha256(
            doc["csv_text"].encode("utf-8")
        ).hexdigest()
        doc["csv_text"] = None
    doc["train_len"] = data.train_len
    doc["test_len"] = data.test_len
    doc["reference_period"] = data.reference_period
    return doc


@dataclass(frozen=True)
class FittedPipeline:
    """A fitted model together with the transforms that produced it."""

    model: dmd.DmdModel
    params: StandardizationParams
    base_channel_names: tuple[str, ...]
    derivative_order: int
    boundary_trim: int
    standardized: bool
    train_len: int
    test_len: int
    t0: float
    reference_period: float
    normalization: str
    config: dict

    @property
    def dt(self) -> float:
        return self.model.dt

    def test_t0(self) -> float:
        return self.t0 + self.train_len * self.dt

    def forecast_standardized(self, horizon: int) -> TimeSeriesFrame:
        """Extrapolate over the test grid, in the fitted (standardized) space."""
        start = self.train_len - self.boundary_trim
        frame = dmd.reconstruct(self.model, range(start, start + horizon))
        return TimeSeriesFrame(
            channel_names=frame.channel_names,
            t0=self.test_t0(),
            dt=self.dt,
            values=frame.values,
        )

    def prepare_window(self, window: TimeSeriesFrame) -> TimeSeriesFrame:
        """Apply the fit-time augmentation and standardization to raw data."""
        aug = augment_derivatives(
            window, AugmentationSpec(self.derivative_order)
        )
        return apply_standardization(aug, self.params)

    def to_doc(self) -> dict:
        model = self.model
        return {
            "format": MODEL_FORMAT,
            "version": MODEL_VERSION,
            "dt": model.dt,
            "t0": self.t0,
            "train_len": self.train_len,
            "test_len": self.test_len,
            "boundary_trim": self.boundary_trim,
            "derivative_order": self.derivative_order,
            "standardize": self.standardized,
            "normalization": self.normalization,
            "reference_period": self.reference_period,
            "base_channel_names": list(self.base_channel_names),
            "channel_names": list(model.channel_names),
            "standardization": {
                "mean": real_array_doc(self.params.mean),
                "std": real_array_doc(self.params.std),
            },
            "n_snapshots": model.n_snapshots,
            "fit_residual": model.fit_residual,
            "b_residual": model.b_residual,
            "x0": real_array_doc(model.x0),
            "A": real_array_doc(model.A),
            "lambdas": complex_array_doc(model.lambdas),
            "omegas": complex_array_doc(model.omegas),
            "omega_usable": [bool(u) for u in model.omega_usable],
            "phi": complex_array_doc(model.Phi),
            "b": complex_array_doc(model.b),
            "config": self.config,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "FittedPipeline":
        if doc.get("format") != MODEL_FORMAT:
            raise DataError(
                f"not a model document (format={doc.get('format')!r})"
            )
        if doc.get("version") != MODEL_VERSION:
            raise DataError(
                f"unsupported model version {doc.get('version')!r}"
            )
        channel_names = tuple(doc["channel_names"])
        model = dmd.DmdModel(
            A=np.array(doc["A"], dtype=float),
            lambdas=complex_array_from_doc(doc["lambdas"]),
            omegas=complex_array_from_doc(doc["omegas"]),
            omega_usable=np.array(doc["omega_usable"], dtype=bool),
            Phi=complex_array_from_doc(doc["phi"]),
            b=complex_array_from_doc(doc["b"]),
            dt=float(doc["dt"]),
            channel_names=channel_names,
            x0=np.array(doc["x0"], dtype=float),
            fit_residual=float(doc["fit_residual"]),
            b_residual=float(doc["b_residual"]),
            n_snapshots=int(doc["n_snapshots"]),
        )
        params = StandardizationParams(
            channel_names,
            np.array(doc["standardization"]["mean"], dtype=float),
            np.array(doc["standardization"]["std"], dtype=float),
        )
        return cls(
            model=model,
            params=params,
            base_channel_names=tuple(doc["base_channel_names"]),
            derivative_order=int(doc["derivative_order"]),
            boundary_trim=int(doc["boundary_trim"]),
            standardized=bool(doc["standardize"]),
            train_len=int(doc["train_len"]),
            test_len=int(doc["test_len"]),
            t0=float(doc["t0"]),
            reference_period=float(doc["reference_period"]),
            normalization=str(doc["normalization"]),
            config=doc.get("config", {}),
        )


def fit_pipeline(cfg: FitConfig) -> FittedPipeline:
    """Resolve the data source and fit the propagator on its training window."""
    data = _resolve_fit_source(cfg)
    train = _window(data.frame, 0, data.train_len)
    aug = augment_derivatives(train, AugmentationSpec(cfg.derivative_order))

    trim = (
        BOUNDARY_ROWS
        if cfg.derivative_order > 0 and cfg.boundary_rows == "trim"
        else 0
    )
    fit_len = data.train_len - 2 * trim
    if fit_len < 3:
        raise ConfigError(
            f"training window of {data.train_len} rows leaves only "
            f"{fit_len} after boundary trimming; need at least 3"
        )
    fit_window = _window(aug, trim, fit_len)

    if cfg.standardize:
        fit_window, params = standardize(fit_window)
    else:
        params = StandardizationParams.identity(fit_window.channel_names)

    model = dmd.fit_frame(fit_window, rcond=cfg.rcond)
    return FittedPipeline(
        model=model,
        params=params,
        base_channel_names=train.channel_names,
        derivative_order=cfg.derivative_order,
        boundary_trim=trim,
        standardized=cfg.standardize,
        train_len=data.train_len,
        test_len=data.test_len,
        t0=data.frame.t0,
        reference_period=data.reference_period,
        normalization=cfg.normalization,
        config=_effective_config(cfg, data),
    )


def _fit_summary(fitted: FittedPipeline, groups) -> dict:
    model = fitted.model
    part = dmd.modal_participation(model)
    total = float(part.sum())
    top = groups[0] if groups else None
    return {
        "n_channels": model.n,
        "n_fit_snapshots": model.n_snapshots,
        "fit_residual": model.fit_residual,
        "b_residual": model.b_residual,
        "top_mode": None
        if top is None
        else {
            "members": list(top.member_indices),
            "frequency_hz": top.frequency_hz,
            "growth_rate": top.growth_rate,
            "participation_fraction": (
                top.participation / total if total > 0 else 0.0
            ),
        },
    }


def run_fit(cfg: FitConfig) -> ArtifactBundle:
    """Fit and render the model document plus the modal tables."""
    fitted = fit_pipeline(cfg)
    rows = dmd.modal_table(fitted.model)
    groups = dmd.mode_components(fitted.model, top_k=fitted.model.n)
    files = {
        "model.json": dumps_json(fitted.to_doc()),
        "modes.csv": render_modes_csv(rows, fitted.model.channel_names),
        "spectrum.csv": render_spectrum_csv(rows),
    }
    return ArtifactBundle(files=files, summary=_fit_summary(fitted, groups))


def _resolve_truth_source(
    fitted: FittedPipeline, cfg: ForecastConfig
) -> TimeSeriesFrame | None:
    """Reload the record behind the model, for truth and train series."""
    prov = fitted.config
    if cfg.csv_text is not None:
        spec = CsvSpec(
            channels=tuple(prov["columns"]) if prov.get("columns") else None,
            time_column=prov.get("time_column"),
            dt=prov.get("dt"),
            t0=prov.get("t0", 0.0),
        )
        frame = parse_csv(cfg.csv_text, spec, source="input csv")
    elif prov.get("preset"):
        preset = get_preset(
            prov["preset"],
            noise_std=prov.get("noise_std", 0.0),
            nonlinearity=prov.get("nonlinearity", 0.0),
            seed=prov.get("seed", 0),
        )
        frame = gen_surrogate(preset.spec)
        if prov.get("columns"):
            frame = frame.select(prov["columns"])
    else:
        return None
    if tuple(frame.channel_names) != fitted.base_channel_names:
        raise DataError(
            f"record channels {frame.channel_names} do not match the "
            f"model's channels {fitted.base_channel_names}"
        )
    return frame


def _error_report_doc(report: ErrorReport) -> dict:
    return {
        "normalization": report.normalization,
        "reference_period": report.reference_period,
        "average_nmse": report.average,
        "per_channel_nmse": {
            name: float(v)
            for name, v in zip(report.channel_names, report.per_channel)
        },
        "trace": {
            "horizon_periods": [float(v) for v in report.horizon],
            "cumulative_average_nmse": [
                float(v) for v in report.cumulative_average
            ],
            "per_step_average_nmse": [
                float(v) for v in report.per_step_average
            ],
        },
    }


def forecast_pipeline(
    fitted: FittedPipeline, cfg: ForecastConfig
) -> tuple[ArtifactBundle, ErrorReport | None]:
    """Forecast over the test grid and optionally score against truth."""
    horizon = cfg.horizon if cfg.horizon is not None else fitted.test_len
    if horizon < 1:
        raise ConfigError(
            "the model was fitted without a test window; pass an explicit "
            "horizon"
        )
    normalization = cfg.normalization or fitted.normalization
    reference_period = cfg.reference_period or fitted.reference_period

    pred_std = fitted.forecast_standardized(horizon)
    pred_phys = destandardize(pred_std, fitted.params)

    frame = _resolve_truth_source(fitted, cfg)
    series: list[tuple[str, TimeSeriesFrame]] = []
    if frame is not None:
        train_aug = augment_derivatives(
            _window(frame, 0, fitted.train_len),
            AugmentationSpec(fitted.derivative_order),
        )
        series.append(("train", train_aug))

    report = None
    truth_std = None
    if cfg.self_check:
        truth_std = pred_std
    elif cfg.evaluate:
        if frame is None:
            raise ConfigError(
                "evaluation requested but the model has no reloadable data "
                "source; pass the record csv or disable evaluation"
            )
        if fitted.test_len == 0:
            raise ConfigError(
                "evaluation requested but the model was fitted without a "
                "test window"
            )
        if horizon > fitted.test_len:
            raise ConfigError(
                f"horizon {horizon} exceeds the test window of "
                f"{fitted.test_len} rows"
            )
        test_raw = _window(frame, fitted.train_len, fitted.test_len)
        truth_std = _window(fitted.prepare_window(test_raw), 0, horizon)

    if truth_std is not None:
        report = nmse(
            pred_std,
            truth_std,
            normalization=normalization,
            reference_period=reference_period,
        )
        series.append(("truth", destandardize(truth_std, fitted.params)))

    series.append(("prediction", pred_phys))

    files = {"forecast.csv": render_long_csv(series)}
    summary: dict = {
        "horizon": horizon,
        "n_channels": fitted.model.n,
        "evaluated": report is not None,
    }
    if report is not None:
        doc = _error_report_doc(report)
        doc["config"] = {
            **fitted.config,
            "horizon": horizon,
            "self_check": cfg.self_check,
        }
        files["report.json"] = dumps_json(doc)
        summary["average_nmse"] = report.average
        summary["final_cumulative_nmse"] = float(
            report.cumulative_average[-1]
        )
    return ArtifactBundle(files=files, summary=summary), report


def load_model_doc(text: str) -> FittedPipeline:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"model document is not valid JSON: {exc}") from exc
    return FittedPipeline.from_doc(doc)


def run_forecast(cfg: ForecastConfig) -> ArtifactBundle:
    fitted = load_model_doc(cfg.model_json_text)
    bundle, _ = forecast_pipeline(fitted, cfg)
    return bundle


def run_evaluate(cfg: EvaluateConfig) -> ArtifactBundle:
    """Score one CSV against another, as they are, on a shared grid."""
    spec = CsvSpec(
        channels=tuple(cfg.columns) if cfg.columns else None,
        time_column=cfg.time_column,
        dt=cfg.dt,
    )
    pred = parse_csv(cfg.pred_csv, spec, source="prediction csv")
    truth = parse_csv(cfg.truth_csv, spec, source="truth csv")
    report = nmse(
        pred,
        truth,
        normalization=cfg.normalization,
        reference_period=cfg.reference_period,
    )
    doc = _error_report_doc(report)
    doc["config"] = cfg.model_dump(exclude={"pred_csv", "truth_csv"})
    return ArtifactBundle(
        files={"report.json": dumps_json(doc)},
        summary={
            "average_nmse": report.average,
            "n_channels": len(report.channel_names),
        },
    )


# --------------------------------------------------------------------------
# Self-test scenarios: deterministic end-to-end runs with built-in checks.


def _check(name: str, passed: bool, detail: str) -> dict:
    return {"name": name, "passed": bool(passed), "detail": detail}


def _run_fit_forecast(fit_cfg: FitConfig, forecast_cfg_extra: dict | None = None):
    fit_bundle = run_fit(fit_cfg)
    forecast_cfg = ForecastConfig(
        model_json_text=fit_bundle.files["model.json"],
        **(forecast_cfg_extra or {}),
    )
    fitted = load_model_doc(fit_bundle.files["model.json"])
    forecast_bundle, report = forecast_pipeline(fitted, forecast_cfg)
    files = dict(fit_bundle.files)
    files.update(forecast_bundle.files)
    return fitted, files, fit_bundle.summary, forecast_bundle.summary, report


def _scenario_linear(seed: int):
    theta = 0.3
    rot = 0.99 * np.array(
        [[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]]
    )
    A = np.zeros((3, 3))
    A[:2, :2] = rot
    A[2, 2] = 0.95
    frame = gen_linear(
        LinearSystemSpec(
            A=A,
            x0=np.array([1.0, 0.5, 2.0]),
            m=400,
            dt=0.05,
            seed=seed,
            channel_names=("osc_a", "osc_b", "relax"),
        )
    )
    csv_text = render_csv(frame)
    fit_cfg = FitConfig(
        csv_text=csv_text,
        train_len=200,
        test_len=200,
        derivative_order=0,
        standardize=False,
        reference_period=2 * math.pi / (theta / 0.05),
    )
    fitted, files, fit_summary, fc_summary, report = _run_fit_forecast(
        fit_cfg, {"csv_text": csv_text}
    )
    files["data.csv"] = csv_text

    checks = [
        _check(
            "exact_linear_forecast",
            report.average < 1e-6,
            f"average NMSE {report.average:.3e} (limit 1e-6)",
        ),
        _check(
            "fit_residual_negligible",
            fitted.model.fit_residual < 1e-9,
            f"relative fit residual {fitted.model.fit_residual:.3e}",
        ),
    ]

    # reload the serialized model and confirm the forecast is bit-identical
    reloaded = load_model_doc(files["model.json"])
    again, _ = forecast_pipeline(
        reloaded, ForecastConfig(model_json_text=files["model.json"], csv_text=csv_text)
    )
    checks.append(
        _check(
            "model_roundtrip_bit_exact",
            again.files["forecast.csv"] == files["forecast.csv"],
            "forecast from reloaded model.json matches in-memory forecast",
        )
    )
    return files, checks, fc_summary


def _top_pair_fraction(fitted: FittedPipeline) -> float:
    part = dmd.modal_participation(fitted.model)
    total = float(part.sum())
    groups = dmd.mode_components(fitted.model, top_k=1)
    return groups[0].participation / total if total > 0 else 0.0


def _scenario_5415m(seed: int):
    fit_cfg = FitConfig(preset="5415m-like", seed=seed)
    fitted, files, fit_summary, fc_summary, report = _run_fit_forecast(fit_cfg)
    frac = _top_pair_fraction(fitted)
    groups = dmd.mode_components(fitted.model, top_k=1)
    checks = [
        _check(
            "dominant_pair_concentration",
            frac >= 0.80 and len(groups[0].member_indices) == 2,
            f"top conjugate pair holds {frac:.4f} of total participation "
            "(required >= 0.80)",
        ),
        _check(
            "noiseless_forecast_accurate",
            report.average < 1e-6,
            f"average NMSE {report.average:.3e} over the full test window",
        ),
    ]
    return files, checks, fc_summary


def _scenario_kcs(seed: int):
    fit_cfg = FitConfig(preset="kcs-like", seed=seed)
    fitted, files, fit_summary, fc_summary, report = _run_fit_forecast(fit_cfg)
    rows = dmd.modal_table(fitted.model)
    top = rows[0]
    im_omega = abs(top.omega.imag)
    checks = [
        _check(
            "top_mode_zero_frequency",
            im_omega < 1e-8,
            f"top participation mode has |Im omega| = {im_omega:.3e} "
            "(required < 1e-8)",
        ),
        _check(
            "top_mode_real_positive",
            top.lam.imag == 0.0 and top.lam.real > 0.0,
            f"top eigenvalue {top.lam:.6g}",
        ),
    ]
    return files, checks, fc_summary


def _scenario_5415m_nonlinear(seed: int):
    fit_cfg = FitConfig(
        preset="5415m-like", seed=seed, nonlinearity=DEMO_NONLINEARITY
    )
    fitted, files, fit_summary, fc_summary, report = _run_fit_forecast(fit_cfg)
    horizon = report.horizon
    trace = report.cumulative_average
    within = trace[horizon <= 2.0]
    crossed = np.nonzero(trace > 0.1)[0]
    first_cross = float(horizon[crossed[0]]) if crossed.size else math.inf
    checkpoints = [
        float(trace[np.searchsorted(horizon, h)]) for h in (1.0, 2.0, 3.0, 4.0)
    ]
    checks = [
        _check(
            "accurate_to_two_periods",
            float(within.max()) < 0.1,
            f"max cumulative NMSE up to 2 periods {within.max():.4f} "
            "(limit 0.1)",
        ),
        _check(
            "degrades_beyond_two_periods",
            first_cross > 2.0 and float(trace[-1]) > 0.1,
            f"first crossing of 0.1 at {first_cross:.2f} periods, final "
            f"cumulative NMSE {trace[-1]:.4f}",
        ),
        _check(
            "error_grows_with_horizon",
            all(a < b for a, b in zip(checkpoints, checkpoints[1:])),
            "cumulative NMSE at 1/2/3/4 periods: "
            + ", ".join(f"{v:.4f}" for v in checkpoints),
        ),
    ]
    return files, checks, fc_summary


_SCENARIOS = {
    "linear": _scenario_linear,
    "5415m-like": _scenario_5415m,
    "kcs-like": _scenario_kcs,
    "5415m-nonlinear": _scenario_5415m_nonlinear,
}


def selftest_scenarios() -> tuple[str, ...]:
    return tuple(_SCENARIOS)


def run_selftest(cfg: SelftestConfig) -> ArtifactBundle:
    """Run a scenario end to end; the summary carries its check results."""
    try:
        scenario = _SCENARIOS[cfg.scenario]
    except KeyError:
        raise ConfigError(
            f"unknown scenario {cfg.scenario!r}; available: "
            f"{', '.join(selftest_scenarios())}"
        ) from None
    files, checks, fc_summary = scenario(cfg.seed)
    passed = all(c["passed"] for c in checks)
    summary = {
        "scenario": cfg.scenario,
        "seed": cfg.seed,
        "passed": passed,
        "checks": checks,
        "forecast": fc_summary,
    }
    files["selftest_report.json"] = dumps_json(summary)
    return ArtifactBundle(files=files, summary=summary)
