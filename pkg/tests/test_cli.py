import json

from dmdkit.cli import main


def run_cli(*argv):
    return main(list(argv))


class TestSynthFitForecastChain:
    def test_end_to_end_on_files(self, tmp_path, capsys):
        data_dir = tmp_path / "data"
        assert run_cli("synth", "--preset", "kcs-like", "--outdir", str(data_dir)) == 0
        data = data_dir / "data.csv"
        assert data.is_file()

        fit_dir = tmp_path / "fit"
        assert (
            run_cli(
                "fit",
                "--input", str(data),
                "--train-len", "132",
                "--test-len", "132",
                "--reference-period", "2.0",
                "--outdir", str(fit_dir),
            )
            == 0
        )
        for name in ("model.json", "modes.csv", "spectrum.csv"):
            assert (fit_dir / name).is_file()

        fc_dir = tmp_path / "fc"
        assert (
            run_cli(
                "forecast",
                "--model", str(fit_dir / "model.json"),
                "--input", str(data),
                "--outdir", str(fc_dir),
            )
            == 0
        )
        assert (fc_dir / "forecast.csv").is_file()
        report = json.loads((fc_dir / "report.json").read_text())
        assert "average_nmse" in report

        ev_dir = tmp_path / "ev"
        assert (
            run_cli(
                "evaluate",
                "--pred", str(data),
                "--truth", str(data),
                "--outdir", str(ev_dir),
            )
            == 0
        )
        assert json.loads((ev_dir / "report.json").read_text())["average_nmse"] == 0.0

    def test_fit_preset_directly(self, tmp_path, capsys):
        outdir = tmp_path / "out"
        assert run_cli("fit", "--preset", "kcs-like", "--outdir", str(outdir)) == 0
        out = capsys.readouterr().out
        assert "top mode" in out


class TestExitCodes:
    def test_config_error_is_2(self, tmp_path, capsys):
        code = run_cli(
            "fit", "--preset", "kcs-like", "--train-len", "4000",
            "--outdir", str(tmp_path),
        )
        assert code == 2
        err = capsys.readouterr().err
        assert "train_len" in err

    def test_validation_error_is_2(self, tmp_path, capsys):
        code = run_cli("fit", "--outdir", str(tmp_path))  # no data source
        assert code == 2
        assert "error" in capsys.readouterr().err

    def test_missing_file_is_2(self, tmp_path, capsys):
        code = run_cli(
            "fit", "--input", str(tmp_path / "gone.csv"), "--outdir", str(tmp_path)
        )
        assert code == 2

    def test_failed_selftest_would_be_1(self, tmp_path, capsys):
        # unknown scenario is a config error, exit 2
        assert (
            run_cli("selftest", "--scenario", "zzz", "--outdir", str(tmp_path)) == 2
        )


class TestSelftestCommand:
    def test_linear_scenario_passes(self, tmp_path, capsys):
        outdir = tmp_path / "st"
        assert (
            run_cli("selftest", "--scenario", "linear", "--outdir", str(outdir)) == 0
        )
        out = capsys.readouterr().out
        assert "PASS exact_linear_forecast" in out
        assert (outdir / "selftest_report.json").is_file()

    def test_byte_identical_across_runs(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        assert run_cli("selftest", "--scenario", "linear", "--seed", "7",
                       "--outdir", str(a)) == 0
        assert run_cli("selftest", "--scenario", "linear", "--seed", "7",
                       "--outdir", str(b)) == 0
        files_a = sorted(p.name for p in a.iterdir())
        files_b = sorted(p.name for p in b.iterdir())
        assert files_a == files_b
        for name in files_a:
            assert (a / name).read_bytes() == (b / name).read_bytes()


class TestConfigFile:
    def test_config_file_with_flag_override(self, tmp_path, capsys):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"preset": "kcs-like", "test_len": 132}))
        outdir = tmp_path / "out"
        assert (
            run_cli(
                "fit", "--config", str(cfg), "--test-len", "100",
                "--outdir", str(outdir),
            )
            == 0
        )
        doc = json.loads((outdir / "model.json").read_text())
        assert doc["config"]["test_len"] == 100  # flag wins

    def test_invalid_config_file_is_2(self, tmp_path, capsys):
        cfg = tmp_path / "run.json"
        cfg.write_text("[1, 2]")
        assert run_cli("fit", "--config", str(cfg), "--outdir", str(tmp_path)) == 2


class TestMiscCommands:
    def test_presets_listing(self, capsys):
        assert run_cli("presets") == 0
        out = capsys.readouterr().out
        assert "5415m-like" in out and "kcs-like" in out

    def test_forecast_self_check(self, tmp_path, capsys):
        fit_dir = tmp_path / "fit"
        run_cli("fit", "--preset", "kcs-like", "--outdir", str(fit_dir))
        fc_dir = tmp_path / "fc"
        assert (
            run_cli(
                "forecast",
                "--model", str(fit_dir / "model.json"),
                "--self-check",
                "--outdir", str(fc_dir),
            )
            == 0
        )
        report = json.loads((fc_dir / "report.json").read_text())
        assert report["average_nmse"] == 0.0
