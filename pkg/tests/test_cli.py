"""Tests for the command-line front end."""

import json

import numpy as np
import pytest

from fracint.cli import main
from fracint.solver1d import solve_l2sigma
from fracint.problems import example


def _read_csv(path):
    with open(path, "r") as fh:
        lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    data = [ln for ln in lines if not ln.startswith("#")]
    header = data[0].split(",")
    rows = [ln.split(",") for ln in data[1:]]
    return lines, header, rows


def test_solve1d_csv_round_trips_bitwise(tmp_path):
    out = tmp_path / "sol.csv"
    code = main(["solve1d", "--problem", "example2", "--alpha", "0.5",
                 "--M", "16", "--N", "16", "--out", str(out),
                 "--no-timestamp", "--quiet"])
    assert code == 0
    _, header, rows = _read_csv(out)
    assert header == ["x", "t", "value"]
    fld = solve_l2sigma(example("example2", 0.5), 16, 16)
    values = np.full_like(fld.values, np.nan)
    xs = {format(float(v), ".17g"): i for i, v in enumerate(fld.x)}
    ts = {format(float(v), ".17g"): k for k, v in enumerate(fld.t)}
    for xs_, ts_, vs_ in rows:
        values[xs[xs_], ts[ts_]] = float(vs_)
    assert np.array_equal(values, fld.values)  # bitwise


def test_outputs_are_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["solve1d", "--problem", "example1", "--alpha", "0.3",
            "--M", "8", "--N", "8", "--no-timestamp", "--quiet"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_timestamp_header_present_by_default(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["solve1d", "--problem", "example1", "--M", "8", "--N", "8",
                 "--out", str(out), "--quiet"]) == 0
    first = out.read_text().splitlines()[0]
    assert first.startswith("# generated ")


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"problem": "example2", "alpha": 0.4,
                               "M": 8, "N": 8}))
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["solve1d", "--config", str(cfg), "--alpha", "0.5",
                 "--out", str(a), "--no-timestamp", "--quiet"]) == 0
    assert main(["solve1d", "--problem", "example2", "--alpha", "0.5",
                 "--M", "8", "--N", "8",
                 "--out", str(b), "--no-timestamp", "--quiet"]) == 0
    assert a.read_bytes() == b.read_bytes()  # the flag beat the config value


def test_unknown_config_key_is_rejected(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"problem": "example1", "bogus": 1}))
    assert main(["solve1d", "--config", str(cfg)]) == 2
    err = json.loads(capsys.readouterr().err.strip())
    assert err["error"]["exit_code"] == 2
    assert "bogus" in err["error"]["message"]


def test_malformed_config_is_exit_2(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text("{not json")
    assert main(["solve1d", "--config", str(cfg)]) == 2
    assert json.loads(capsys.readouterr().err.strip())["error"]["exit_code"] == 2


def test_unknown_problem_is_exit_2(capsys):
    assert main(["solve1d", "--problem", "nope"]) == 2
    capsys.readouterr()


def test_validation_failure_is_exit_3(tmp_path, capsys):
    spec = {"p": "1+0*x", "q": "0*x", "r": "0*x", "mu": 1.0,
            "kernel": "x*s", "f": "0*x+0*t", "g": "1+0*x",
            "h1": "0*t", "h2": "0*t"}
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"inline_problem": spec, "M": 8, "N": 8}))
    assert main(["solve1d", "--config", str(cfg)]) == 3
    err = json.loads(capsys.readouterr().err.strip())
    assert err["error"]["exit_code"] == 3


def test_numeric_failure_is_exit_4(tmp_path, capsys):
    spec = {"p": "1+0*x", "q": "0*x", "r": "0*x", "mu": 1.0,
            "kernel": "x*s", "f": "exp(1000+0*x+0*t)", "g": "0*x",
            "h1": "0*t", "h2": "0*t"}
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"inline_problem": spec, "M": 8, "N": 8}))
    with np.errstate(over="ignore"):
        assert main(["solve1d", "--config", str(cfg)]) == 4
    err = json.loads(capsys.readouterr().err.strip())
    assert err["error"]["exit_code"] == 4


def test_inline_problem_rejects_unsafe_expression(tmp_path, capsys):
    spec = {"p": "__import__('os')", "q": "0*x", "r": "0*x", "mu": 1.0,
            "kernel": "x*s", "f": "0*x+0*t", "g": "0*x",
            "h1": "0*t", "h2": "0*t"}
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"inline_problem": spec, "M": 8, "N": 8}))
    assert main(["solve1d", "--config", str(cfg)]) == 2
    capsys.readouterr()


def test_ladder_csv_and_json(tmp_path):
    out = tmp_path / "lad.csv"
    jout = tmp_path / "lad.json"
    assert main(["ladder", "--problem", "example1", "--alpha", "0.5",
                 "--rungs", "8:8,16:16", "--out", str(out),
                 "--json-out", str(jout), "--no-timestamp"]) == 0
    _, header, rows = _read_csv(out)
    assert header[:5] == ["problem", "scheme", "alpha", "M", "N"]
    assert len(rows) == 2
    assert 1.5 < float(rows[1][header.index("order_max")]) < 2.5
    payload = json.loads(jout.read_text())
    assert payload["problem"] == "example1"


def test_compare_emits_both_schemes(tmp_path):
    out = tmp_path / "cmp.csv"
    assert main(["compare", "--problem", "example2", "--alpha", "0.7",
                 "--rungs", "8:8,16:16", "--out", str(out),
                 "--no-timestamp"]) == 0
    _, header, rows = _read_csv(out)
    assert "l2-1sigma_error" in header and "l1_error" in header
    e_sig = float(rows[1][header.index("l2-1sigma_error")])
    e_l1 = float(rows[1][header.index("l1_error")])
    assert e_sig < e_l1  # the offset-node scheme is more accurate


def test_reproduce_table_bad_id_is_exit_2(capsys):
    assert main(["reproduce-table", "--id", "99"]) == 2
    capsys.readouterr()


def test_reproduce_table_runs(tmp_path):
    out = tmp_path / "t6.csv"
    assert main(["reproduce-table", "--id", "6", "--out", str(out),
                 "--no-timestamp"]) == 0
    _, header, rows = _read_csv(out)
    assert header == ["dt", "l2_error", "l2_rate", "linf_error", "linf_rate"]
    assert [r[0] for r in rows] == ["1/5", "1/10", "1/20", "1/40"]
    rates = [float(r[2]) for r in rows[:-1]]
    assert all(abs(r - 2.0) < 0.1 for r in rates)


def test_solve2d_dt_flag(tmp_path):
    out = tmp_path / "s2.csv"
    assert main(["solve2d", "--problem", "example4", "--alpha", "0.4",
                 "--J1", "1", "--dt", "0.25", "--out", str(out),
                 "--no-timestamp", "--quiet"]) == 0
    _, header, rows = _read_csv(out)
    assert header == ["x", "y", "t", "value"]
    assert len(rows) == 4 * 4 * 5  # (2M)^2 nodes, N+1 levels
    assert main(["solve2d", "--problem", "example4", "--dt", "0.3"]) == 2
