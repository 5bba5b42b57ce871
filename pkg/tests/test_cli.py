import json

import pytest

from qfridge import ConfigError
from qfridge.cli import (EXIT_COMPUTE, EXIT_CONFIG, EXIT_OK, EXIT_VERIFY,
                         main, parse_config)
from qfridge.verify import CheckResult

FIG2 = ["--Ec", "1", "--eta", "0.5", "--Tc", "1", "--Tr", "2", "--Th", "10",
        "--p", "0.05", "--g", "0.05"]


# ----------------------------------------------------------------------
# config assembly
# ----------------------------------------------------------------------

def test_shorthand_rate_expansion():
    cfg = parse_config(["steady"] + FIG2)
    assert cfg.params.ps == (0.05, 0.05, 0.05)


def test_individual_rate_overrides_shorthand():
    cfg = parse_config(["steady"] + FIG2 + ["--pr", "0.02"])
    assert cfg.params.ps == (0.05, 0.02, 0.05)


def test_missing_parameter_named():
    argv = ["steady", "--Ec", "1", "--eta", "0.5", "--Tc", "1", "--Tr", "2",
            "--Th", "10", "--p", "0.05"]   # no --g
    with pytest.raises(ConfigError, match="'g'"):
        parse_config(argv)


def test_config_file_supplies_values(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"Ec": 1, "eta": 0.5, "Tc": 1, "Tr": 2,
                                "Th": 10, "p": 0.05, "g": 0.05}))
    cfg = parse_config(["steady", "--config", str(path)])
    assert cfg.params.g == 0.05
    # flags override the file
    cfg = parse_config(["steady", "--config", str(path), "--g", "0.01"])
    assert cfg.params.g == 0.01


def test_unknown_config_key_rejected(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"Ec": 1, "bogus": 3}))
    with pytest.raises(ConfigError, match="bogus"):
        parse_config(["steady", "--config", str(path)])


def test_command_scoped_key_rejected(tmp_path):
    # 'knob' belongs to sweep, not steady
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"knob": "g"}))
    with pytest.raises(ConfigError, match="knob"):
        parse_config(["steady", "--config", str(path)])


def test_malformed_config_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ConfigError):
        parse_config(["steady", "--config", str(path)])


def test_physics_validation_becomes_config_error():
    argv = ["steady", "--Ec", "1", "--eta", "0.5", "--Tc", "5", "--Tr", "2",
            "--Th", "10", "--p", "0.05", "--g", "0.05"]   # T_c > T_r
    with pytest.raises(ConfigError):
        parse_config(argv)


def test_sweep_grid_sources():
    cfg = parse_config(["sweep", "--knob", "g", "--log", "1e-3", "1e-1", "3"]
                       + FIG2)
    assert cfg.sweep.grid == pytest.approx((1e-3, 1e-2, 1e-1))
    cfg = parse_config(["sweep", "--knob", "g", "--lin", "0.01", "0.03", "3"]
                       + FIG2)
    assert cfg.sweep.grid == pytest.approx((0.01, 0.02, 0.03))
    with pytest.raises(ConfigError):   # both grid flavors at once
        parse_config(["sweep", "--knob", "g", "--log", "1e-3", "1e-1", "3",
                      "--lin", "0.01", "0.03", "3"] + FIG2)
    with pytest.raises(ConfigError):   # no grid at all
        parse_config(["sweep", "--knob", "g"] + FIG2)


def test_sweep_seeds_swept_parameter():
    # --g may be omitted when g itself is the knob
    argv = ["sweep", "--knob", "g", "--log", "1e-3", "1e-1", "3",
            "--Ec", "1", "--eta", "0.5", "--Tc", "1", "--Tr", "2",
            "--Th", "10", "--p", "0.05"]
    cfg = parse_config(argv)
    assert cfg.params.g == pytest.approx(1e-3)


# ----------------------------------------------------------------------
# exit codes and outputs
# ----------------------------------------------------------------------

def test_steady_writes_csv_and_exits_zero(tmp_path, capsys):
    out = tmp_path / "steady.csv"
    assert main(["steady"] + FIG2 + ["--out", str(out)]) == EXIT_OK
    text = out.read_text()
    lines = text.splitlines()
    assert lines[0] == "delta,gamma,Q_c,eta,eta_carnot,is_fridge"
    fields = lines[1].split(",")
    assert float(fields[1]) == pytest.approx(2.745368e-3, rel=1e-5)
    assert fields[5] == "1"
    assert "is_fridge    = True" in capsys.readouterr().out


def test_outdir_env_sets_default_location(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("QFRIDGE_OUTDIR", str(tmp_path))
    assert main(["qsl"] + FIG2) == EXIT_OK
    assert (tmp_path / "qsl.csv").exists()
    out = capsys.readouterr().out
    assert "chi" in out and "tau" in out


def test_trajectory_csv_schema(tmp_path):
    out = tmp_path / "traj.csv"
    code = main(["evolve"] + FIG2 + ["--t-end", "5", "--store-every", "50",
                                     "--out", str(out)])
    assert code == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "t,J_c,trace_dist_to_steady,avg_power"
    first = lines[1].split(",")
    assert float(first[0]) == 0.0
    assert float(first[3]) == 0.0    # average power defined as 0 at t = 0
    last = lines[-1].split(",")
    assert float(last[0]) == pytest.approx(5.0)


def test_identical_configs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["sweep", "--knob", "g", "--log", "1e-3", "1e-1", "4"] + FIG2
    assert main(argv + ["--out", str(a)]) == EXIT_OK
    assert main(argv + ["--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_config_error_exit_code(capsys):
    code = main(["steady", "--Ec", "1"])
    assert code == EXIT_CONFIG
    assert "config error" in capsys.readouterr().err


def test_compute_error_exit_code(capsys):
    # boundary-maximum regime: the optimizer raises, the CLI maps it to 3
    argv = ["optimize", "--Ec", "0.001", "--eta", "0.029", "--Tc", "1",
            "--Tr", "30", "--Th", "900", "--p", "0.001", "--g", "0.0001"]
    code = main(argv)
    assert code == EXIT_COMPUTE
    assert "computation error" in capsys.readouterr().err


def test_optimize_prints_summary(capsys):
    argv = ["optimize", "--Ec", "1", "--eta", "0.4", "--Tc", "1", "--Tr",
            "2", "--Th", "10", "--pc", "0.01", "--pr", "0.02", "--ph",
            "0.05", "--g", "0.01", "--bracket", "0.05", "0.4"]
    assert main(argv) == EXIT_OK
    out = capsys.readouterr().out
    assert "eta_star" in out and "chi_star" in out and "eta_carnot" in out


def test_verify_exit_codes(monkeypatch, capsys):
    ok_rows = [CheckResult("1", "x", "PASS", "fine"),
               CheckResult("7", "y", "KNOWN-DEVIATION", "documented")]
    monkeypatch.setattr("qfridge.cli.run_all_checks", lambda: ok_rows)
    assert main(["verify"]) == EXIT_OK       # KNOWN rows do not fail
    capsys.readouterr()
    bad_rows = ok_rows + [CheckResult("2", "z", "FAIL", "broken")]
    monkeypatch.setattr("qfridge.cli.run_all_checks", lambda: bad_rows)
    assert main(["verify"]) == EXIT_VERIFY
    assert "FAIL" in capsys.readouterr().out
