"""Tests for grids, problem containers and validation."""

import numpy as np
import pytest

from fracint.core_types import (Problem1D, SolutionField, make_spatial_grid,
                                make_temporal_grid, validate_problem_1d,
                                validate_problem_2d)
from fracint.problems import example


def test_temporal_grid_offset():
    grid = make_temporal_grid(2.0, 8, 0.4)
    assert grid.sigma == pytest.approx(1.0 - 0.4 / 2.0)
    assert grid.dt == pytest.approx(0.25)
    assert grid.node(3) == pytest.approx(0.75)
    assert grid.offset_node(3) == pytest.approx((3 + grid.sigma) * 0.25)
    assert np.allclose(grid.nodes(), np.arange(9) * 0.25)


def test_grid_argument_checks():
    with pytest.raises(ValueError):
        make_temporal_grid(1.0, 8, 1.0)
    with pytest.raises(ValueError):
        make_temporal_grid(1.0, 0, 0.5)
    with pytest.raises(ValueError):
        make_temporal_grid(-1.0, 8, 0.5)
    with pytest.raises(ValueError):
        make_spatial_grid(1.0, 0)
    with pytest.raises(ValueError):
        make_spatial_grid(0.0, 8)


def _constant_problem(**overrides):
    base = dict(
        p=lambda x: np.ones_like(x),
        q=lambda x: np.zeros_like(x),
        r=lambda x: np.zeros_like(x),
        mu=1.0,
        kernel=lambda x, s: np.zeros_like(x),
        f=lambda x, t: np.zeros_like(x),
        g=lambda x: np.zeros_like(x),
        h1=lambda t: np.zeros_like(np.asarray(t, dtype=float)),
        h2=lambda t: np.zeros_like(np.asarray(t, dtype=float)),
        alpha=0.5,
    )
    base.update(overrides)
    return Problem1D(**base)


def test_validation_accepts_builtins():
    grid = make_spatial_grid(1.0, 16)
    for name in ("example1", "example2", "example3"):
        for alpha in (0.1, 0.5, 0.9):
            report = validate_problem_1d(example(name, alpha), grid)
            assert report, report.violations
    for alpha in (0.1, 0.5, 0.9):
        assert validate_problem_2d(example("example4", alpha))


def test_validation_rejects_nonpositive_diffusion():
    prob = _constant_problem(p=lambda x: -np.ones_like(x))
    report = validate_problem_1d(prob, make_spatial_grid(1.0, 16))
    assert not report
    assert any("p must be strictly positive" in v for v in report.violations)


def test_validation_rejects_negative_reaction_and_mu():
    prob = _constant_problem(r=lambda x: -np.ones_like(x), mu=-1.0)
    report = validate_problem_1d(prob, make_spatial_grid(1.0, 16))
    assert any("r must be nonnegative" in v for v in report.violations)
    assert any("mu must be nonnegative" in v for v in report.violations)


def test_validation_mesh_bound_against_convection():
    # need M > L*||q||_inf/(2*p0); q = 100 and p = 1 demand M > 50
    prob = _constant_problem(q=lambda x: 100.0 * np.ones_like(x))
    assert not validate_problem_1d(prob, make_spatial_grid(1.0, 16))
    assert validate_problem_1d(prob, make_spatial_grid(1.0, 64))


def test_validation_compatibility_corner():
    prob = _constant_problem(g=lambda x: np.ones_like(x))
    report = validate_problem_1d(prob, make_spatial_grid(1.0, 16))
    assert any("g(0) != h1(0)" in v for v in report.violations)


def test_solution_field_rejects_non_finite():
    vals = np.zeros((3, 3))
    vals[1, 1] = np.nan
    with pytest.raises(ValueError):
        SolutionField(values=vals, x=np.arange(3.0), t=np.arange(3.0))
