"""Command-line front end.

Thin client over the pipeline: commands assemble a request from a JSON
config file plus flag overrides, run it (in process, or against a remote
service via --url), write the returned artifact documents into the output
directory, and print a short summary.

Exit codes: 0 success, 1 numerical failure or failed self-test checks,
2 configuration or data errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import pydantic

from .client import make_client
from .config import (
    EvaluateConfig,
    FitConfig,
    ForecastConfig,
    SelftestConfig,
    SynthConfig,
)
from .errors import ConfigError, DataError, NumericalError


def _load_config_file(path: str | None) -> dict:
    if not path:
        return {}
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"no such config file: {p}")
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{p}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"{p}: config must be a JSON object")
    return doc


def _merge(config_file: dict, overrides: dict) -> dict:
    merged = dict(config_file)
    merged.update({k: v for k, v in overrides.items() if v is not None})
    return merged


def _read_text(path: str, what: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"no such {what}: {p}")
    return p.read_text(encoding="utf-8")


def _write_bundle(bundle, outdir: str) -> None:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in bundle.files.items():
        target = out / name
        target.write_text(text, encoding="utf-8")
        print(f"wrote {target}")


def _columns_arg(raw: str | None) -> list[str] | None:
    if raw is None:
        return None
    return [c.strip() for c in raw.split(",") if c.strip()]


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--outdir", default="out", help="output directory")
    parser.add_argument(
        "--url", default=None, help="run against a remote service instead"
    )
    parser.add_argument(
        "--config", default=None, help="JSON config file; flags override it"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmdkit",
        description=(
            "Linear-propagator modal analysis and short-term forecasting "
            "for multichannel time series."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a surrogate dataset")
    _add_common(p)
    p.add_argument("--preset", default=None)
    p.add_argument(
        "--spec-file", default=None, help="JSON surrogate spec (alternative)"
    )
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--noise-std", type=float, default=None)
    p.add_argument("--nonlinearity", type=float, default=None)

    p = sub.add_parser("fit", help="fit a propagator and write modal tables")
    _add_common(p)
    p.add_argument("--input", default=None, help="CSV record to fit")
    p.add_argument("--preset", default=None, help="fit a named preset instead")
    p.add_argument("--columns", default=None, help="comma-separated channels")
    p.add_argument("--time-column", default=None)
    p.add_argument("--no-time-column", action="store_true")
    p.add_argument("--dt", type=float, default=None)
    p.add_argument("--train-len", type=int, default=None)
    p.add_argument("--test-len", type=int, default=None)
    p.add_argument(
        "--derivative-order", type=int, choices=(0, 1, 2), default=None
    )
    p.add_argument(
        "--standardize",
        action=argparse.BooleanOptionalAction,
        default=None,
    )
    p.add_argument("--boundary-rows", choices=("trim", "keep"), default=None)
    p.add_argument("--rcond", type=float, default=None)
    p.add_argument(
        "--normalization", choices=("variance", "unit"), default=None
    )
    p.add_argument("--reference-period", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--noise-std", type=float, default=None)
    p.add_argument("--nonlinearity", type=float, default=None)

    p = sub.add_parser("forecast", help="forecast from a fitted model file")
    _add_common(p)
    p.add_argument("--model", required=True, help="model.json from fit")
    p.add_argument(
        "--input", default=None, help="CSV record for truth (CSV-fitted models)"
    )
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument(
        "--evaluate",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="score against the test window (default on)",
    )
    p.add_argument(
        "--self-check",
        action="store_true",
        help="score the prediction against itself (must give NMSE 0)",
    )
    p.add_argument(
        "--normalization", choices=("variance", "unit"), default=None
    )
    p.add_argument("--reference-period", type=float, default=None)

    p = sub.add_parser("evaluate", help="score a prediction CSV against truth")
    _add_common(p)
    p.add_argument("--pred", required=True)
    p.add_argument("--truth", required=True)
    p.add_argument("--columns", default=None)
    p.add_argument("--time-column", default=None)
    p.add_argument("--dt", type=float, default=None)
    p.add_argument(
        "--normalization", choices=("variance", "unit"), default=None
    )
    p.add_argument("--reference-period", type=float, default=None)

    p = sub.add_parser("selftest", help="run a built-in end-to-end scenario")
    _add_common(p)
    p.add_argument("--scenario", default="linear")
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("presets", help="list the available surrogate presets")
    p.add_argument("--url", default=None)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _cmd_synth(args) -> int:
    overrides = {
        "preset": args.preset,
        "seed": args.seed,
        "noise_std": args.noise_std,
        "nonlinearity": args.nonlinearity,
    }
    if args.spec_file:
        overrides["spec"] = json.loads(_read_text(args.spec_file, "spec file"))
    cfg = SynthConfig(**_merge(_load_config_file(args.config), overrides))
    bundle = make_client(args.url).synth(cfg)
    _write_bundle(bundle, args.outdir)
    s = bundle.summary
    print(
        f"generated {s['n_steps']} steps x {s['n_channels']} channels "
        f"(dt={s['dt']:g})"
    )
    return 0


def _cmd_fit(args) -> int:
    overrides = {
        "preset": args.preset,
        "columns": _columns_arg(args.columns),
        "time_column": args.time_column,
        "dt": args.dt,
        "train_len": args.train_len,
        "test_len": args.test_len,
        "derivative_order": args.derivative_order,
        "standardize": args.standardize,
        "boundary_rows": args.boundary_rows,
        "rcond": args.rcond,
        "normalization": args.normalization,
        "reference_period": args.reference_period,
        "seed": args.seed,
        "noise_std": args.noise_std,
        "nonlinearity": args.nonlinearity,
    }
    if args.input:
        overrides["csv_text"] = _read_text(args.input, "input file")
    merged = _merge(_load_config_file(args.config), overrides)
    if args.no_time_column:
        merged["time_column"] = None
    cfg = FitConfig(**merged)
    bundle = make_client(args.url).fit(cfg)
    _write_bundle(bundle, args.outdir)
    s = bundle.summary
    line = (
        f"fitted {s['n_channels']} channels on {s['n_fit_snapshots']} "
        f"snapshots, relative fit residual {s['fit_residual']:.3e}"
    )
    top = s.get("top_mode")
    if top:
        line += (
            f"; top mode at {top['frequency_hz']:.6g} Hz carries "
            f"{100 * top['participation_fraction']:.1f}% of participation"
        )
    print(line)
    return 0


def _cmd_forecast(args) -> int:
    overrides = {
        "horizon": args.horizon,
        "evaluate": args.evaluate,
        "normalization": args.normalization,
        "reference_period": args.reference_period,
    }
    if args.self_check:
        overrides["self_check"] = True
    if args.input:
        overrides["csv_text"] = _read_text(args.input, "input file")
    merged = _merge(_load_config_file(args.config), overrides)
    merged["model_json_text"] = _read_text(args.model, "model file")
    cfg = ForecastConfig(**merged)
    bundle = make_client(args.url).forecast(cfg)
    _write_bundle(bundle, args.outdir)
    s = bundle.summary
    if s.get("evaluated"):
        print(
            f"forecast {s['horizon']} steps, average NMSE "
            f"{s['average_nmse']:.6g}"
        )
    else:
        print(f"forecast {s['horizon']} steps (no evaluation)")
    return 0


def _cmd_evaluate(args) -> int:
    overrides = {
        "columns": _columns_arg(args.columns),
        "time_column": args.time_column,
        "dt": args.dt,
        "normalization": args.normalization,
        "reference_period": args.reference_period,
        "pred_csv": _read_text(args.pred, "prediction file"),
        "truth_csv": _read_text(args.truth, "truth file"),
    }
    cfg = EvaluateConfig(**_merge(_load_config_file(args.config), overrides))
    bundle = make_client(args.url).evaluate(cfg)
    _write_bundle(bundle, args.outdir)
    print(f"average NMSE {bundle.summary['average_nmse']:.6g}")
    return 0


def _cmd_selftest(args) -> int:
    overrides = {"scenario": args.scenario, "seed": args.seed}
    cfg = SelftestConfig(**_merge(_load_config_file(args.config), overrides))
    bundle = make_client(args.url).selftest(cfg)
    _write_bundle(bundle, args.outdir)
    for check in bundle.summary["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        print(f"{status} {check['name']}: {check['detail']}")
    if not bundle.summary["passed"]:
        print(f"selftest {args.scenario}: FAILED", file=sys.stderr)
        return 1
    print(f"selftest {args.scenario}: all checks passed")
    return 0


def _cmd_presets(args) -> int:
    for info in make_client(args.url).presets():
        print(
            f"{info['name']}: {info['description']} "
            f"[{len(info['channels'])} channels, train {info['train_len']}, "
            f"test {info['test_len']}, reference period "
            f"{info['reference_period']:g} s]"
        )
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "synth": _cmd_synth,
    "fit": _cmd_fit,
    "forecast": _cmd_forecast,
    "evaluate": _cmd_evaluate,
    "selftest": _cmd_selftest,
    "presets": _cmd_presets,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, DataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except pydantic.ValidationError as exc:
        first = exc.errors()[0]
        loc = ".".join(str(p) for p in first["loc"]) or "config"
        print(f"error: invalid config: {loc}: {first['msg']}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
