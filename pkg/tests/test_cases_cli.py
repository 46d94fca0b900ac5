import json
import math

import numpy as np
import pytest

import revisit as rv
from revisit.cases import (
    CSV_COLUMNS,
    CaseConfig,
    SweepSpec,
    case_from_dict,
    case_row,
    parse_walker,
    resolve_case,
    rows_to_csv,
    run_case,
    run_sweep,
    sweep_from_dict,
)
from revisit.cli import main
from revisit.engine import EngineSettings, analyze
from revisit.errors import ConfigError

FAST = dict(window_days=3.0, grid_res_deg=1.0)

BASE = CaseConfig(
    altitude_km=600.0, inclination_deg=55.0, elevation_deg=15.0,
    latitude_deg=20.0, **FAST,
)


class TestCaseConfig:
    def test_requires_exactly_one_inclination_source(self):
        with pytest.raises(ConfigError):
            resolve_case(CaseConfig(altitude_km=500.0, elevation_deg=10.0))
        with pytest.raises(ConfigError):
            resolve_case(
                CaseConfig(altitude_km=500.0, inclination_deg=50.0, sso=True, elevation_deg=10.0)
            )

    def test_requires_exactly_one_sensor(self):
        with pytest.raises(ConfigError):
            resolve_case(CaseConfig(altitude_km=500.0, inclination_deg=50.0))
        with pytest.raises(ConfigError):
            resolve_case(
                CaseConfig(
                    altitude_km=500.0, inclination_deg=50.0,
                    elevation_deg=10.0, boresight_deg=30.0,
                )
            )

    def test_requires_exactly_one_size(self):
        with pytest.raises(ConfigError):
            resolve_case(CaseConfig(inclination_deg=50.0, elevation_deg=10.0))
        with pytest.raises(ConfigError):
            resolve_case(
                CaseConfig(
                    altitude_km=500.0, semi_major_axis_km=6878.0,
                    inclination_deg=50.0, elevation_deg=10.0,
                )
            )

    def test_sso_resolution(self):
        rc = resolve_case(
            CaseConfig(altitude_km=500.0, sso=True, elevation_deg=30.0, **FAST)
        )
        assert rc.inclination_deg == pytest.approx(97.4, abs=0.1)

    def test_walker_string_and_dict(self):
        assert parse_walker("3/3/1") == (3, 3, 1)
        with pytest.raises(ConfigError):
            parse_walker("3-3-1")
        cfg = case_from_dict({"altitude_km": 500.0, "walker": "4/2/1"})
        assert cfg.walker == (4, 2, 1)
        with pytest.raises(ConfigError):
            case_from_dict({"no_such_field": 1})

    def test_run_case_matches_engine(self):
        rep = run_case(BASE)
        rc = resolve_case(BASE)
        want = analyze(rc.elements, rc.sensor, rc.lat, walker=rc.walker, settings=rc.settings)
        assert rep == want

    def test_degenerate_walker_identical_to_single(self):
        single = run_case(BASE)
        walker = run_case(CaseConfig(**{**BASE.__dict__, "walker": (1, 1, 0)}))
        assert walker == single


class TestSweep:
    def test_axis_values_inclusive(self):
        spec = SweepSpec(base=BASE, axes={"altitude_km": (400.0, 600.0, 100.0)})
        assert spec.axis_values("altitude_km").tolist() == [400.0, 500.0, 600.0]

    def test_validation(self):
        with pytest.raises(ConfigError):
            SweepSpec(base=BASE, axes={}).cells()
        with pytest.raises(ConfigError):
            SweepSpec(base=BASE, axes={"walker": (1, 2, 1)}).cells()
        with pytest.raises(ConfigError):
            SweepSpec(base=BASE, axes={"altitude_km": (500.0, 400.0, 50.0)}).cells()

    def test_single_cell_sweep_equals_run_case(self):
        spec = SweepSpec(base=BASE, axes={"altitude_km": (600.0, 600.0, 50.0)})
        rows = run_sweep(spec, max_workers=1)
        assert len(rows) == 1
        rep = run_case(BASE)
        assert rows[0]["mrt_h"] == f"{rep.mrt_hours:.6f}"
        assert rows[0]["error"] == ""

    def test_two_axis_row_order_and_schema(self):
        spec = SweepSpec(
            base=BASE,
            axes={"altitude_km": (500.0, 600.0, 100.0), "latitude_deg": (0.0, 10.0, 10.0)},
        )
        rows = run_sweep(spec, max_workers=2)
        assert len(rows) == 4
        assert [r["case_id"] for r in rows] == ["0", "1", "2", "3"]
        assert [r["alt_km"][:3] for r in rows] == ["500", "500", "600", "600"]
        csv = rows_to_csv(rows)
        header = csv.splitlines()[0]
        assert header == ",".join(CSV_COLUMNS)

    def test_determinism_byte_identical(self):
        spec = SweepSpec(base=BASE, axes={"latitude_deg": (0.0, 20.0, 10.0)})
        a = rows_to_csv(run_sweep(spec, max_workers=1))
        b = rows_to_csv(run_sweep(spec, max_workers=2))
        assert a == b

    def test_error_cell_continues(self):
        # Latitude above the inclination: that cell errors, others run.
        spec = SweepSpec(base=BASE, axes={"latitude_deg": (50.0, 60.0, 10.0)})
        rows = run_sweep(spec, max_workers=1)
        assert "LatitudeUnreachableError" in rows[1]["error"]
        assert rows[0]["error"] == "" and rows[0]["mrt_h"] != ""

    def test_window_exceeded_sentinel(self):
        cfg = CaseConfig(
            altitude_km=600.0, inclination_deg=55.0, boresight_deg=1.0,
            latitude_deg=20.0, window_days=0.5, grid_res_deg=1.0,
        )
        row = case_row(0, cfg)
        assert row["error"] == "window_exceeded"
        assert row["mrt_h"] == ""
        assert row["coverage_frac"] != ""

    def test_worker_env_override(self, monkeypatch):
        from revisit.cases import default_workers

        monkeypatch.setenv("REVISIT_WORKERS", "3")
        assert default_workers() == 3
        monkeypatch.delenv("REVISIT_WORKERS")
        assert default_workers() >= 1

    def test_sweep_from_dict(self):
        spec = sweep_from_dict(
            {
                "case": {"altitude_km": 500.0, "inclination_deg": 50.0,
                         "elevation_deg": 10.0, "window_days": 2.0, "grid_res_deg": 1.0},
                "sweep": {"altitude_km": {"min": 400.0, "max": 500.0, "step": 50.0}},
            }
        )
        assert len(spec.cells()) == 3


class TestCli:
    def test_run_basic(self, capsys):
        code = main([
            "run", "--altitude-km", "600", "--inclination-deg", "55",
            "--elevation-deg", "15", "--latitude-deg", "20",
            "--window-days", "3", "--grid-res-deg", "1",
        ])
        out = capsys.readouterr().out
        assert code == 0
        assert "mrt_h=" in out and "coverage_frac=" in out

    def test_run_csv_row(self, capsys):
        code = main([
            "run", "--altitude-km", "600", "--inclination-deg", "55",
            "--elevation-deg", "15", "--latitude-deg", "20",
            "--window-days", "3", "--grid-res-deg", "1", "--csv",
        ])
        out = capsys.readouterr().out
        assert code == 0
        assert out.splitlines()[0] == ",".join(CSV_COLUMNS)
        assert len(out.splitlines()) == 2

    def test_run_config_error_exit_code(self, capsys):
        code = main(["run", "--altitude-km", "600", "--elevation-deg", "15"])
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_run_missing_config_file(self, capsys):
        code = main(["run", "--config", "/nonexistent.json"])
        assert code == 1

    def test_run_with_config_and_override(self, tmp_path, capsys):
        cfg = {
            "case": {
                "altitude_km": 600.0, "inclination_deg": 55.0,
                "elevation_deg": 15.0, "latitude_deg": 0.0,
                "window_days": 3.0, "grid_res_deg": 1.0,
            }
        }
        path = tmp_path / "case.json"
        path.write_text(json.dumps(cfg))
        code = main(["run", "--config", str(path), "--latitude-deg", "20", "--csv"])
        out = capsys.readouterr().out
        assert code == 0
        row = out.splitlines()[1].split(",")
        assert row[CSV_COLUMNS.index("lat_deg")] == "20.000"

    def test_sensor_override_replaces_mode(self, tmp_path, capsys):
        cfg = {"case": {"altitude_km": 600.0, "inclination_deg": 55.0,
                        "elevation_deg": 15.0, "window_days": 2.0, "grid_res_deg": 1.0}}
        path = tmp_path / "case.json"
        path.write_text(json.dumps(cfg))
        code = main(["run", "--config", str(path), "--boresight-deg", "30", "--csv"])
        out = capsys.readouterr().out
        assert code == 0
        row = out.splitlines()[1].split(",")
        assert row[CSV_COLUMNS.index("sensor_mode")] == "boresight"

    def test_sweep_to_file(self, tmp_path):
        cfg = {
            "case": {"altitude_km": 600.0, "inclination_deg": 55.0,
                     "elevation_deg": 15.0, "latitude_deg": 20.0,
                     "window_days": 2.0, "grid_res_deg": 1.0},
            "sweep": {"altitude_km": {"min": 500.0, "max": 700.0, "step": 100.0}},
        }
        path = tmp_path / "sweep.json"
        path.write_text(json.dumps(cfg))
        out_path = tmp_path / "out.csv"
        code = main(["sweep", "--config", str(path), "--workers", "1", "--out", str(out_path)])
        assert code == 0
        lines = out_path.read_text().splitlines()
        assert len(lines) == 4

    def test_sweep_requires_sweep_section(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"case": {"altitude_km": 500.0}}))
        assert main(["sweep", "--config", str(path)]) == 1

    def test_oracle_cross_check(self, capsys):
        code = main([
            "run", "--altitude-km", "650", "--inclination-deg", "65",
            "--elevation-deg", "12", "--latitude-deg", "25",
            "--window-days", "2", "--grid-res-deg", "1",
            "--oracle", "--oracle-step", "20",
        ])
        out = capsys.readouterr().out
        assert code == 0
        assert "oracle_mrt_h=" in out
        assert "mrt_diff_h=" in out
