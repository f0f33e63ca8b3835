"""Tests for the error metrics and refinement-ladder driver."""

import json
import math

import numpy as np
import pytest

from fracint.analysis import (double_mesh_error, errors_2d, max_error,
                              observed_order, run_ladder)
from fracint.problems import example
from fracint.solver2d import solve_2d


def test_observed_order_on_synthetic_errors():
    assert abs(observed_order(4.0e-3, 1.0e-3) - 2.0) < 1e-12
    assert abs(observed_order(1.0, 0.5) - 1.0) < 1e-12


def test_max_error_zero_for_exact_field():
    from fracint.solver1d import solve_l2sigma
    f1 = solve_l2sigma(example("example1", 0.5), 8, 8)
    # feeding the numeric values back as the reference gives zero error
    assert max_error(f1, lambda X, T: f1.values) == 0.0


def test_errors_2d_norm_relation():
    prob = example("example4", 0.5)
    fld = solve_2d(prob, 2, 2, 4)
    linf, l2 = errors_2d(fld, prob.exact)
    assert 0.0 < l2 <= linf
    # the initial level carries zero error, so skipping it rescales the mean
    linf_s, l2_s = errors_2d(fld, prob.exact, skip_initial=True)
    assert linf_s == linf
    N = len(fld.t) - 1
    assert l2_s == pytest.approx(l2 * math.sqrt((N + 1) / N), rel=1e-12)


def test_double_mesh_error_decreases():
    prob = example("example3", 0.5)
    e1 = double_mesh_error(prob, "l2-1sigma", 16, 8)
    e2 = double_mesh_error(prob, "l2-1sigma", 32, 16)
    assert e1 > e2 > 0.0


def test_run_ladder_report_and_serialization():
    prob = example("example1", 0.5)
    report = run_ladder(prob, "l2-1sigma", [(8, 8), (16, 16)])
    assert report.problem == "example1"
    assert len(report.rungs) == 2
    assert report.rungs[0].orders == {}
    assert 1.5 < report.rungs[1].orders["max"] < 2.5

    payload = json.loads(report.to_json())
    assert payload["alpha"] == 0.5
    assert len(payload["rungs"]) == 2

    lines = report.to_csv().strip().split("\n")
    assert lines[0].startswith("problem,scheme,alpha,M,N,error_max")
    cells = lines[1].split(",")
    # 17-significant-digit serialization round-trips bitwise
    assert float(cells[5]) == report.rungs[0].errors["max"]


def test_run_ladder_records_failures_and_continues():
    prob = example("example1", 0.5)
    report = run_ladder(prob, "l2-1sigma", [(0, 8), (8, 8)])
    assert report.rungs[0].failure is not None
    assert report.rungs[0].errors == {}
    assert report.rungs[1].failure is None
    assert report.rungs[1].errors["max"] > 0.0


def test_parallel_ladder_matches_serial(monkeypatch):
    monkeypatch.setenv("FRACINT_THREADS", "2")
    prob = example("example2", 0.4)
    rungs = [(8, 8), (16, 16), (32, 32)]
    serial = run_ladder(prob, "l1", rungs, parallel=False)
    parallel = run_ladder(prob, "l1", rungs, parallel=True)
    for a, b in zip(serial.rungs, parallel.rungs):
        assert a.errors == b.errors
        assert a.orders == b.orders


def test_run_ladder_2d_uses_both_norms():
    prob = example("example4", 0.5)
    report = run_ladder(prob, "l2-1sigma", [(1, 2), (1, 4)])
    for rung in report.rungs:
        assert set(rung.errors) == {"linf", "l2"}
    assert report.rungs[1].orders["linf"] > 0.0


def test_run_ladder_rejects_empty():
    with pytest.raises(ValueError):
        run_ladder(example("example1", 0.5), "l2-1sigma", [])
