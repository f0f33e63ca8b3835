"""Convolution weights for the Caputo derivative (L2-1sigma and L1 flavors)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gamma

import numpy as np

from .core_types import TemporalGrid

L2_1SIGMA = "L2-1sigma"
L1 = "L1"


@dataclass(frozen=True)
class CaputoWeights:
    """Weights d[j] multiplying the differences U^{j+1} - U^j.

    For the L2-1sigma scheme at level n, d has n+1 entries (j = 0..n) and the
    weighted sum approximates the Caputo derivative at t_{n+sigma}.  For L1 at
    level n, d has n entries (j = 0..n-1) and approximates the derivative
    at t_n.
    """

    scheme: str
    n: int
    d: np.ndarray
    alpha: float
    dt: float


def l2_1sigma_weights(grid: TemporalGrid, n: int) -> CaputoWeights:
    """L2-1sigma weights d_j^{n+1} for stepping from level n to n+1."""
    if not 0 <= n <= grid.N - 1:
        raise ValueError(f"level index must satisfy 0 <= n <= N-1, got n={n}, N={grid.N}")
    alpha, sigma, dt = grid.alpha, grid.sigma, grid.dt
    scale = 1.0 / (dt ** alpha * gamma(2.0 - alpha))
    a0 = sigma ** (1.0 - alpha)
    if n == 0:
        d = np.array([a0 * scale])
        return CaputoWeights(L2_1SIGMA, n, d, alpha, dt)

    k = np.arange(1, n + 1, dtype=float)
    a = (k + sigma) ** (1.0 - alpha) - (k - 1.0 + sigma) ** (1.0 - alpha)
    b = ((k + sigma) ** (2.0 - alpha) - (k - 1.0 + sigma) ** (2.0 - alpha)) / (2.0 - alpha) \
        - ((k + sigma) ** (1.0 - alpha) + (k - 1.0 + sigma) ** (1.0 - alpha)) / 2.0

    d = np.empty(n + 1)
    d[0] = a[n - 1] - b[n - 1]
    if n >= 2:
        # interior: d[j] = b_{n-j+1} + a_{n-j} - b_{n-j} for j = 1..n-1
        j = np.arange(1, n)
        d[1:n] = b[n - j] + a[n - j - 1] - b[n - j - 1]
    d[n] = a0 + b[0]
    d *= scale
    return CaputoWeights(L2_1SIGMA, n, d, alpha, dt)


def l1_weights(grid: TemporalGrid, n: int) -> CaputoWeights:
    """L1 weights for the Caputo derivative at t_n: d[j] = d~_{n-j} / (dt^a G(2-a))."""
    if not 1 <= n <= grid.N:
        raise ValueError(f"level index must satisfy 1 <= n <= N, got n={n}, N={grid.N}")
    alpha, dt = grid.alpha, grid.dt
    scale = 1.0 / (dt ** alpha * gamma(2.0 - alpha))
    j = np.arange(1, n + 1, dtype=float)
    dtil = j ** (1.0 - alpha) - (j - 1.0) ** (1.0 - alpha)  # d~_1 .. d~_n
    d = dtil[::-1] * scale  # index j multiplies U^{j+1}-U^j, weight d~_{n-j}
    return CaputoWeights(L1, n, d, alpha, dt)


def apply_caputo(weights: CaputoWeights, history: np.ndarray) -> np.ndarray:
    """Evaluate sum_j d[j] * (history[j+1] - history[j]) along axis 0."""
    history = np.asarray(history, dtype=float)
    if history.shape[0] != len(weights.d) + 1:
        raise ValueError(
            f"history must hold {len(weights.d) + 1} time levels, got {history.shape[0]}")
    diffs = np.diff(history, axis=0)
    return np.tensordot(weights.d, diffs, axes=(0, 0))


def caputo_monomial_oracle(alpha: float, m: float, t: float):
    """Analytic Caputo derivative of t^m: Gamma(m+1)/Gamma(m+1-alpha) * t^(m-alpha)."""
    t = np.asarray(t, dtype=float)
    return gamma(m + 1.0) / gamma(m + 1.0 - alpha) * t ** (m - alpha)
