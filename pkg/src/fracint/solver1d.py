"""Implicit time steppers for the 1D problem (L2-1sigma and L1 schemes)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gamma

import numpy as np

from .core_types import (Problem1D, SolutionField, make_spatial_grid,
                         make_temporal_grid, validate_problem_1d)
from .fracops import l1_weights, l2_1sigma_weights
from .linalg import Tridiag, ZeroPivotError, dense_lu_factor, dense_lu_solve, thomas_solve

# The printed explicit diagonal carries a mu*dt/2 * K(x, sigma*dt) term for
# every level; for n = 0 the underlying quadrature has no trapezoid panel, so
# a quadrature-consistent variant drops that term at the first step only.
SIGMA_AS_PRINTED = "as-printed"
SIGMA_QUAD_CONSISTENT = "quadrature-consistent"
DEFAULT_SIGMA_MODE = SIGMA_AS_PRINTED


@dataclass(frozen=True)
class StepSystem1D:
    """Implicit/explicit coefficients for one time level, interior nodes 1..M-1."""

    A_coef: np.ndarray
    B_coef: np.ndarray
    C_coef: np.ndarray
    At_coef: np.ndarray
    Bt_coef: np.ndarray
    Ct_coef: np.ndarray

    def implicit_matrix(self) -> Tridiag:
        return Tridiag(sub=self.A_coef[1:], diag=self.B_coef, sup=self.C_coef[:-1])

    def explicit_apply(self, u_prev: np.ndarray) -> np.ndarray:
        """Apply the explicit stencil to the full previous level (with boundaries)."""
        return (self.At_coef * u_prev[:-2] + self.Bt_coef * u_prev[1:-1]
                + self.Ct_coef * u_prev[2:])


def _interior(prob: Problem1D, x_int: np.ndarray):
    p = np.broadcast_to(np.asarray(prob.p(x_int), dtype=float), x_int.shape)
    q = np.broadcast_to(np.asarray(prob.q(x_int), dtype=float), x_int.shape)
    r = np.broadcast_to(np.asarray(prob.r(x_int), dtype=float), x_int.shape)
    return p, q, r


def assemble_step(prob: Problem1D, sgrid, tgrid, n: int,
                  sigma_mode: str = DEFAULT_SIGMA_MODE) -> StepSystem1D:
    """Coefficients of the offset-node implicit scheme at level n."""
    dx, dt, sigma = sgrid.dx, tgrid.dt, tgrid.sigma
    mu = prob.mu
    x_int = sgrid.nodes()[1:-1]
    p, q, r = _interior(prob, x_int)
    k0 = np.broadcast_to(np.asarray(prob.kernel(x_int, 0.0), dtype=float), x_int.shape)
    k_sig = np.broadcast_to(np.asarray(prob.kernel(x_int, sigma * dt), dtype=float), x_int.shape)
    d_top = l2_1sigma_weights(tgrid, n).d[-1]

    A = -q * sigma / (2.0 * dx) - p * sigma / dx ** 2
    B = d_top + 2.0 * p * sigma / dx ** 2 + r * sigma + mu * sigma ** 2 * dt / 2.0 * k0
    C = q * sigma / (2.0 * dx) - p * sigma / dx ** 2
    At = q * (1.0 - sigma) / (2.0 * dx) + p * (1.0 - sigma) / dx ** 2
    Bt = (d_top - 2.0 * p * (1.0 - sigma) / dx ** 2 - r * (1.0 - sigma)
          - mu * sigma * dt / 2.0 * k_sig
          - mu * dt * sigma * (1.0 - sigma) / 2.0 * k0)
    if not (sigma_mode == SIGMA_QUAD_CONSISTENT and n == 0):
        Bt = Bt - mu * dt / 2.0 * k_sig
    Ct = -q * (1.0 - sigma) / (2.0 * dx) + p * (1.0 - sigma) / dx ** 2
    return StepSystem1D(A, B, C, At, Bt, Ct)


def build_rhs(prob: Problem1D, sgrid, tgrid, history: np.ndarray, n: int,
              weights=None) -> np.ndarray:
    """Load vector F^n over interior nodes; history holds full rows 0..n."""
    x_int = sgrid.nodes()[1:-1]
    dt = tgrid.dt
    t_off = tgrid.offset_node(n)
    rhs = np.broadcast_to(np.asarray(prob.f(x_int, t_off), dtype=float), x_int.shape).copy()
    if n == 0:
        return rhs
    if weights is None:
        weights = l2_1sigma_weights(tgrid, n)
    hist_int = history[: n + 1, 1:-1]
    # Caputo history: -sum_{j<n} d_j (U^{j+1} - U^j)
    rhs -= np.tensordot(weights.d[:-1], np.diff(hist_int, axis=0), axes=(0, 0))
    # kernel history over levels 0..n-1 (trapezoid weights dt/2, dt, ..., dt)
    elapsed = t_off - np.arange(n) * dt
    kv = np.stack([np.broadcast_to(np.asarray(prob.kernel(x_int, s), dtype=float), x_int.shape)
                   for s in elapsed])
    w = np.full(n, dt)
    w[0] = dt / 2.0
    rhs -= prob.mu * np.tensordot(w, kv * hist_int[:-1], axes=(0, 0))
    return rhs


def _check_finite(vec: np.ndarray, what: str, level: int):
    if not np.all(np.isfinite(vec)):
        m = int(np.argmax(~np.isfinite(vec)))
        raise FloatingPointError(
            f"non-finite {what} at time level {level}, interior node index {m}")


def _check_weight_monotonicity(tgrid):
    """Hypothesis of the maximum-norm stability bound; verified, not assumed."""
    d = l2_1sigma_weights(tgrid, tgrid.N - 1).d
    if not (np.all(np.diff(d) > 0.0) and d[0] > 0.0):
        raise RuntimeError(
            f"weight monotonicity violated for alpha={tgrid.alpha}, N={tgrid.N}; "
            "the stability theory does not apply on this mesh")


def stability_bound(prob: Problem1D, tgrid, f_offset_max: float, u0_max: float) -> float:
    """Right-hand side of the discrete maximum-norm stability estimate."""
    return u0_max + 2.0 * tgrid.T ** tgrid.alpha * gamma(1.0 - tgrid.alpha) * f_offset_max


def solve_l2sigma(prob: Problem1D, M: int, N: int,
                  sigma_mode: str = DEFAULT_SIGMA_MODE,
                  override_validation: bool = False,
                  stability_check: bool = True) -> SolutionField:
    """Run the offset-node implicit scheme on an (M, N) mesh."""
    sgrid = make_spatial_grid(prob.L, M)
    tgrid = make_temporal_grid(prob.T, N, _alpha_of(prob))
    report = validate_problem_1d(prob, sgrid)
    if not report and not override_validation:
        raise ValueError("problem validation failed: " + "; ".join(report.violations))
    _check_weight_monotonicity(tgrid)

    x = sgrid.nodes()
    t = tgrid.nodes()
    U = np.empty((N + 1, M + 1))
    U[0] = prob.g(x)
    U[:, 0] = prob.h1(t)
    U[:, -1] = prob.h2(t)
    _check_finite(U[0], "initial data", 0)

    f_off_max = 0.0
    step_first = assemble_step(prob, sgrid, tgrid, 0, sigma_mode)
    step_later = assemble_step(prob, sgrid, tgrid, min(1, N - 1), sigma_mode) if N > 1 else None
    for n in range(N):
        step = step_first if n == 0 else step_later
        weights = l2_1sigma_weights(tgrid, n)
        rhs = build_rhs(prob, sgrid, tgrid, U, n, weights)
        f_off_max = max(f_off_max, float(
            np.max(np.abs(prob.f(x[1:-1], tgrid.offset_node(n))))))
        rhs = rhs + step.explicit_apply(U[n])
        rhs[0] -= step.A_coef[0] * U[n + 1, 0]
        rhs[-1] -= step.C_coef[-1] * U[n + 1, -1]
        _check_finite(rhs, "right-hand side", n)
        try:
            U[n + 1, 1:-1] = thomas_solve(step.implicit_matrix(), rhs)
        except ZeroPivotError:
            lu = dense_lu_factor(step.implicit_matrix().to_dense())
            U[n + 1, 1:-1] = dense_lu_solve(lu, rhs)
        _check_finite(U[n + 1], "solution", n + 1)

    if stability_check:
        bound = stability_bound(prob, tgrid, f_off_max, float(np.max(np.abs(U[0]))))
        worst = float(np.max(np.abs(U[1:])))
        if worst > bound * (1.0 + 1e-10):
            raise RuntimeError(
                f"discrete stability bound violated: max |U| = {worst:.6g} > {bound:.6g}")
    return SolutionField(values=U.T, x=x, t=t, scheme="l2-1sigma", alpha=tgrid.alpha)


def solve_l1(prob: Problem1D, M: int, N: int,
             override_validation: bool = False) -> SolutionField:
    """Run the whole-node L1 scheme on an (M, N) mesh."""
    sgrid = make_spatial_grid(prob.L, M)
    tgrid = make_temporal_grid(prob.T, N, _alpha_of(prob))
    report = validate_problem_1d(prob, sgrid)
    if not report and not override_validation:
        raise ValueError("problem validation failed: " + "; ".join(report.violations))

    dx, dt = sgrid.dx, tgrid.dt
    mu = prob.mu
    x = sgrid.nodes()
    t = tgrid.nodes()
    x_int = x[1:-1]
    p, q, r = _interior(prob, x_int)
    k0 = np.broadcast_to(np.asarray(prob.kernel(x_int, 0.0), dtype=float), x_int.shape)
    c0 = 1.0 / (dt ** tgrid.alpha * gamma(2.0 - tgrid.alpha))  # weight of U^n (d~_1 = 1)

    sub_full = -p / dx ** 2 - q / (2.0 * dx)
    sup_full = -p / dx ** 2 + q / (2.0 * dx)
    diag = c0 + 2.0 * p / dx ** 2 + r + mu * dt / 2.0 * k0
    A = Tridiag(sub=sub_full[1:], diag=diag, sup=sup_full[:-1])

    U = np.empty((N + 1, M + 1))
    U[0] = prob.g(x)
    U[:, 0] = prob.h1(t)
    U[:, -1] = prob.h2(t)
    _check_finite(U[0], "initial data", 0)

    for n in range(1, N + 1):
        weights = l1_weights(tgrid, n)
        hist_int = U[: n + 1, 1:-1]
        rhs = np.broadcast_to(np.asarray(prob.f(x_int, t[n]), dtype=float), x_int.shape).copy()
        # move all known Caputo terms right: weights.d[-1] = c0 multiplies (U^n - U^{n-1})
        rhs -= np.tensordot(weights.d[:-1], np.diff(hist_int[:-1], axis=0), axes=(0, 0)) \
            if n >= 2 else 0.0
        rhs += c0 * hist_int[n - 1]
        # kernel trapezoid over [0, t_n], K(0) U^n endpoint held implicit
        elapsed = t[n] - np.arange(n) * dt
        kv = np.stack([np.broadcast_to(np.asarray(prob.kernel(x_int, s), dtype=float),
                                       x_int.shape) for s in elapsed])
        w = np.full(n, dt)
        w[0] = dt / 2.0
        rhs -= mu * np.tensordot(w, kv * hist_int[:-1], axes=(0, 0))
        rhs[0] -= sub_full[0] * U[n, 0]
        rhs[-1] -= sup_full[-1] * U[n, -1]
        _check_finite(rhs, "right-hand side", n)
        try:
            U[n, 1:-1] = thomas_solve(A, rhs)
        except ZeroPivotError:
            lu = dense_lu_factor(A.to_dense())
            U[n, 1:-1] = dense_lu_solve(lu, rhs)
        _check_finite(U[n], "solution", n)

    return SolutionField(values=U.T, x=x, t=t, scheme="l1", alpha=tgrid.alpha)


def _alpha_of(prob: Problem1D) -> float:
    return prob.alpha
