"""Command-line interface: config handling, exit codes, artifacts."""

import csv
import json
import math

import pytest

from spdc_oam.cli import ConfigError, RunConfig, main


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_run_config_round_trip():
    config = RunConfig(command="spectrum", pump_l=2, l_window=14,
                       query=(1, 1), format="json")
    again = RunConfig.from_dict(config.to_dict())
    assert again == config


def test_run_config_rejects_unknown_fields():
    with pytest.raises(ConfigError, match="unknown config field"):
        RunConfig.from_dict({"command": "spectrum", "pump_el": 2})


def test_run_config_requires_command():
    with pytest.raises(ConfigError, match="command"):
        RunConfig.from_dict({"pump_l": 2})


def test_run_config_range_validation():
    with pytest.raises(ConfigError, match="l_window"):
        RunConfig(command="spectrum", pump_l=3, l_window=5)
    with pytest.raises(ConfigError, match="rel_tol"):
        RunConfig(command="spectrum", rel_tol=1e-13)
    with pytest.raises(ConfigError, match="log_base"):
        RunConfig(command="entropy-table", log_base="decimal")
    with pytest.raises(ConfigError, match="azimuthal_nodes"):
        RunConfig(command="spectrum", azimuthal_nodes=2)
    with pytest.raises(ConfigError, match="pump_p"):
        RunConfig(command="spectrum", pump_family="POV", pump_p=1)


def test_run_config_canonicalizes_numeric_log_base():
    config = RunConfig.from_dict({"command": "entropy-table", "log_base": "2"})
    assert config.log_base == 2.0
    config = RunConfig.from_dict({"command": "entropy-table", "log_base": 2})
    assert config.log_base == 2.0


def test_bad_subcommand_exits_two():
    with pytest.raises(SystemExit) as err:
        main(["no-such-command"])
    assert err.value.code == 2


def test_config_error_exit_code(tmp_path, capsys):
    code = main(["spectrum", "--lp", "1", "--l-window", "2",
                 "--outdir", str(tmp_path)])
    assert code == 2
    assert "config error" in capsys.readouterr().err


def test_window_too_small_exit_code(tmp_path, capsys):
    code = main(["spectrum", "--lp", "0", "--l-window", "8",
                 "--outdir", str(tmp_path)])
    assert code == 4
    assert "window too small" in capsys.readouterr().err


def test_quadrature_failure_exit_code(tmp_path, capsys):
    # r_max=3 clips the pump tail, so the radial rule reports non-decay
    code = main(["spectrum", "--lp", "0", "--r-max", "3",
                 "--outdir", str(tmp_path)])
    assert code == 3
    assert "quadrature error" in capsys.readouterr().err


def test_spectrum_csv_artifact(tmp_path, capsys):
    out = tmp_path / "grid.csv"
    code = main(["spectrum", "--lp", "1", "--output", str(out)])
    assert code == 0
    rows = read_csv(out)
    assert rows[0] == ["l_s", "l_i", "probability"]
    w = 24  # default window for an LG pump of charge 1
    assert len(rows) == 1 + (2 * w + 1) ** 2
    table = {(int(ls), int(li)): p for ls, li, p in rows[1:]}
    # the tied global maxima land on (0,1) and (1,0) with identical strings
    assert table[(0, 1)] == table[(1, 0)] == "0.154320993359"
    assert table[(0, 0)] == "0"
    assert max(float(p) for p in table.values()) == float(table[(0, 1)])
    stdout = capsys.readouterr().out
    assert "scenario LG->LG,LG, window 24" in stdout
    assert "maxima: (0,1) 0.154320993359  (1,0) 0.154320993359" in stdout


def test_artifacts_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["spectrum", "--lp", "2", "--output", str(a)]) == 0
    assert main(["spectrum", "--lp", "2", "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_spectrum_json_artifact(tmp_path):
    out = tmp_path / "grid.json"
    assert main(["spectrum", "--lp", "1", "--project", "POV",
                 "--format", "json", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["scenario"]["pump_family"] == "LG"
    assert payload["scenario"]["idler_family"] == "POV"
    assert payload["scenario"]["ring_radius"] == 0.25
    total = sum(p["probability"] for p in payload["pairs"])
    assert total == pytest.approx(1.0, abs=1e-9)
    assert all(p["l_s"] + p["l_i"] == 1 for p in payload["pairs"])


def test_conserving_query_widens_the_window(tmp_path, capsys):
    assert main(["spectrum", "--lp", "1", "--query", "30", "-29",
                 "--outdir", str(tmp_path)]) == 0
    stdout = capsys.readouterr().out
    assert "window 30" in stdout
    line = [ln for ln in stdout.splitlines() if ln.startswith("query")][0]
    assert line.startswith("query 30,-29 -> probability ")
    assert float(line.rsplit(" ", 1)[1]) > 0.0


def test_nonconserving_query_reports_zero(tmp_path, capsys):
    assert main(["spectrum", "--lp", "1", "--query", "3", "5",
                 "--outdir", str(tmp_path)]) == 0
    stdout = capsys.readouterr().out
    assert "query 3,5 -> probability 0" in stdout


def test_config_file_with_flag_override(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({
        "command": "spectrum", "pump_l": 2, "format": "json",
        "outdir": str(tmp_path)}))
    out = tmp_path / "spectrum_lg_l3_lg.json"
    assert main(["spectrum", "--config", str(config), "--lp", "3"]) == 0
    payload = json.loads(out.read_text())
    assert payload["scenario"]["pump_l"] == 3  # the explicit flag wins


def test_config_file_alone(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({
        "command": "spectrum", "pump_l": 2, "format": "json",
        "outdir": str(tmp_path)}))
    assert main(["spectrum", "--config", str(config)]) == 0
    payload = json.loads((tmp_path / "spectrum_lg_l2_lg.json").read_text())
    assert payload["scenario"]["pump_l"] == 2


def test_outdir_environment_variable(tmp_path, monkeypatch):
    monkeypatch.setenv("SPDC_OAM_OUTDIR", str(tmp_path))
    assert main(["spectrum", "--lp", "1"]) == 0
    assert (tmp_path / "spectrum_lg_l1_lg.csv").exists()


def test_explicit_outdir_beats_environment(tmp_path, monkeypatch):
    env_dir = tmp_path / "env"
    flag_dir = tmp_path / "flag"
    env_dir.mkdir(), flag_dir.mkdir()
    monkeypatch.setenv("SPDC_OAM_OUTDIR", str(env_dir))
    assert main(["spectrum", "--lp", "1", "--outdir", str(flag_dir)]) == 0
    assert (flag_dir / "spectrum_lg_l1_lg.csv").exists()
    assert not (env_dir / "spectrum_lg_l1_lg.csv").exists()


def test_entropy_table_csv(tmp_path):
    out = tmp_path / "table.csv"
    assert main(["entropy-table", "--format", "csv", "--output", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["l_p", "LG->LG,LG", "POV->LG,LG", "POV->POV,POV"]
    assert [r[0] for r in rows[1:]] == ["0", "1", "2", "3", "4"]
    assert float(rows[2][1]) == pytest.approx(2.40144, abs=1e-4)


def test_entropy_table_json_with_base_two(tmp_path):
    out = tmp_path / "table.json"
    assert main(["entropy-table", "--log-base", "2", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["convention"]["log_base"] == 2.0
    nat = 1.85377  # natural-log value of the first all-LG cell
    assert payload["rows"][0]["entropies"][0] == pytest.approx(nat / math.log(2.0), abs=1e-4)
