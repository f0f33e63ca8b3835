"""Tests for the split trapezoidal memory quadrature."""

import numpy as np
import pytest

from fracint.core_types import make_temporal_grid
from fracint.problems import example
from fracint.volterra import (TAIL_FULL, TAIL_IMPLICIT, memory_term_l1,
                              memory_term_l2sigma)


def _constant_kernel_problem():
    prob = example("example2", 0.5)
    return prob


def _with_kernel(kern):
    base = example("example2", 0.5)
    import dataclasses
    return dataclasses.replace(base, kernel=kern)


def test_offset_quadrature_exact_on_constants():
    # K = 1 and u = 1: the integral over [0, t_{n+sigma}] is t_{n+sigma}
    prob = _with_kernel(lambda x, s: np.ones_like(x) + 0.0 * s)
    x = np.linspace(0.1, 0.9, 5)
    for N in (4, 9):
        grid = make_temporal_grid(1.0, N, prob.alpha)
        for n in (0, 1, N - 1):
            history = np.ones((n + 1, len(x)))
            term = memory_term_l2sigma(prob, grid, history, x, tail=TAIL_FULL)
            total = term.explicit + term.implicit_coef * 1.0  # U^{n+1} = 1
            assert np.max(np.abs(total - grid.offset_node(n))) < 1e-13


def test_implicit_tail_drops_one_panel_sample():
    # for a constant kernel the two tail modes differ by exactly sigma*dt/2
    prob = _with_kernel(lambda x, s: np.ones_like(x) + 0.0 * s)
    x = np.linspace(0.0, 1.0, 4)
    grid = make_temporal_grid(1.0, 8, prob.alpha)
    history = np.ones((4, len(x)))
    full = memory_term_l2sigma(prob, grid, history, x, tail=TAIL_FULL)
    impl = memory_term_l2sigma(prob, grid, history, x, tail=TAIL_IMPLICIT)
    gap = full.explicit - impl.explicit
    assert np.allclose(gap, grid.sigma * grid.dt / 2.0, atol=1e-15)
    assert np.allclose(full.implicit_coef, impl.implicit_coef)


def test_whole_node_quadrature_exact_on_constants():
    prob = _with_kernel(lambda x, s: np.ones_like(x) + 0.0 * s)
    x = np.linspace(0.0, 1.0, 6)
    grid = make_temporal_grid(1.0, 10, prob.alpha)
    for n in (1, 4, 10):
        history = np.ones((n, len(x)))
        term = memory_term_l1(prob, grid, n, history, x)
        total = term.explicit + term.implicit_coef * 1.0  # U^n = 1
        assert np.max(np.abs(total - grid.node(n))) < 1e-13


def test_offset_quadrature_second_order():
    # K(x,s) = s, u(t) = t: int_0^t (t-s) s ds = t^3/6
    prob = _with_kernel(lambda x, s: np.ones_like(x) * s)
    x = np.array([0.25, 0.75])

    def error(N):
        grid = make_temporal_grid(1.0, N, prob.alpha)
        n = N - 1
        t_levels = np.arange(n + 1) * grid.dt
        history = np.broadcast_to(t_levels[:, None], (n + 1, len(x))).copy()
        term = memory_term_l2sigma(prob, grid, history, x, tail=TAIL_FULL)
        u_top = grid.node(n + 1)
        t_off = grid.offset_node(n)
        # the scheme integrates the linear-in-time interpolant of u
        total = term.explicit + term.implicit_coef * u_top
        return np.max(np.abs(total - t_off ** 3 / 6.0))

    order = np.log2(error(16) / error(32))
    assert order > 1.9


def test_memory_scaling_in_mu():
    import dataclasses
    prob = _with_kernel(lambda x, s: x * s)
    prob3 = dataclasses.replace(prob, mu=3.0)
    x = np.linspace(0.0, 1.0, 5)
    grid = make_temporal_grid(1.0, 6, prob.alpha)
    rng = np.random.default_rng(7)
    history = rng.standard_normal((4, len(x)))
    one = memory_term_l2sigma(prob, grid, history, x)
    three = memory_term_l2sigma(prob3, grid, history, x)
    assert np.allclose(three.explicit, 3.0 * one.explicit)
    assert np.allclose(three.implicit_coef, 3.0 * one.implicit_coef)


def test_l1_memory_requires_history_levels():
    prob = _constant_kernel_problem()
    grid = make_temporal_grid(1.0, 4, prob.alpha)
    x = np.linspace(0.0, 1.0, 3)
    with pytest.raises(ValueError):
        memory_term_l1(prob, grid, 0, np.ones((0, 3)), x)
    with pytest.raises(ValueError):
        memory_term_l1(prob, grid, 2, np.ones((3, 3)), x)
