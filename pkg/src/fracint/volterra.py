"""Trapezoidal discretization of the Volterra memory integral.

The quadrature is split into an explicit part (known history levels) and the
coefficient of the not-yet-known top level, so the stepper can move the latter
onto the implicit matrix diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core_types import Problem1D, TemporalGrid


@dataclass(frozen=True)
class MemoryTerm:
    """Split memory quadrature: value = explicit + implicit_coef * U_top."""

    explicit: np.ndarray
    implicit_coef: np.ndarray


# Handling of the partial panel [t_n, t_{n+sigma}] of the memory quadrature.
# "full-tail" samples the kernel at both panel ends; "implicit-tail" keeps only
# the zero-lag kernel sample (the two coincide to second order whenever the
# kernel vanishes at zero elapsed time, but their error constants differ).
TAIL_FULL = "full-tail"
TAIL_IMPLICIT = "implicit-tail"


def _memory_split_l2sigma(kern: Callable, mu: float, grid: TemporalGrid,
                          history: np.ndarray,
                          tail: str = TAIL_FULL) -> MemoryTerm:
    """Trapezoid over [0, t_{n+sigma}] with kern(s) returning kernel values per node.

    ``history`` holds levels 0..n; the U^{n+1} contribution, with coefficient
    mu * sigma^2 * dt * K(., 0) / 2, is returned separately.
    """
    if tail not in (TAIL_FULL, TAIL_IMPLICIT):
        raise ValueError(f"unknown tail mode {tail!r}")
    history = np.asarray(history, dtype=float)
    n = history.shape[0] - 1
    dt, sigma = grid.dt, grid.sigma
    t_off = grid.offset_node(n)

    k0 = np.broadcast_to(np.asarray(kern(0.0), dtype=float), history.shape[1:]).copy()
    explicit = np.zeros(history.shape[1:])
    if n >= 1:
        # composite trapezoid over [0, t_n]
        elapsed = t_off - np.arange(n + 1) * dt  # at t_0 .. t_n
        kv = np.stack([np.broadcast_to(np.asarray(kern(s), dtype=float), history.shape[1:])
                       for s in elapsed])
        w = np.full(n + 1, dt)
        w[0] = w[-1] = dt / 2.0
        explicit += np.tensordot(w, kv * history, axes=(0, 0))
    # tail [t_n, t_{n+sigma}]
    if tail == TAIL_FULL:
        k_sig = np.broadcast_to(np.asarray(kern(sigma * dt), dtype=float),
                                history.shape[1:])
        explicit += (sigma * dt / 2.0) * k_sig * history[n]
    explicit += (sigma * dt / 2.0) * (1.0 - sigma) * k0 * history[n]
    implicit = (sigma ** 2 * dt / 2.0) * k0
    return MemoryTerm(explicit=mu * explicit, implicit_coef=mu * implicit)


def _memory_split_l1(kern: Callable, mu: float, grid: TemporalGrid, n: int,
                     history: np.ndarray) -> MemoryTerm:
    """Trapezoid over [0, t_n]; the K(.,0) * U^n endpoint term is implicit."""
    if n < 1:
        raise ValueError("L1 memory term needs n >= 1")
    history = np.asarray(history, dtype=float)
    if history.shape[0] != n:
        raise ValueError(f"history must hold levels 0..{n - 1}, got {history.shape[0]} levels")
    dt = grid.dt
    t_n = grid.node(n)
    elapsed = t_n - np.arange(n) * dt  # at t_0 .. t_{n-1}
    kv = np.stack([np.broadcast_to(np.asarray(kern(s), dtype=float), history.shape[1:])
                   for s in elapsed])
    w = np.full(n, dt)
    w[0] = dt / 2.0
    explicit = np.tensordot(w, kv * history, axes=(0, 0))
    k0 = np.broadcast_to(np.asarray(kern(0.0), dtype=float), history.shape[1:])
    implicit = (dt / 2.0) * k0
    return MemoryTerm(explicit=mu * explicit, implicit_coef=mu * implicit.copy())


def memory_term_l2sigma(prob: Problem1D, grid: TemporalGrid,
                        history: np.ndarray, x: np.ndarray,
                        tail: str = TAIL_FULL) -> MemoryTerm:
    """Memory quadrature at t_{n+sigma} for the offset-node scheme."""
    x = np.asarray(x, dtype=float)
    return _memory_split_l2sigma(lambda s: prob.kernel(x, s), prob.mu, grid,
                                 history, tail)


def memory_term_l1(prob: Problem1D, grid: TemporalGrid, n: int,
                   history: np.ndarray, x: np.ndarray) -> MemoryTerm:
    """Memory quadrature at t_n for the whole-node scheme."""
    x = np.asarray(x, dtype=float)
    return _memory_split_l1(lambda s: prob.kernel(x, s), prob.mu, grid, n, history)
