"""Haar wavelet basis, closed-form repeated integrals and collocation tables."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np


@dataclass(frozen=True)
class HaarIndex:
    """Wavelet number i >= 1; for i >= 2, i = m + k + 1 with m = 2^j."""

    i: int
    j: int
    k: int
    m: int

    @property
    def breakpoints(self):
        """(zeta1, zeta2, zeta3) = (k/m, (k+1/2)/m, (k+1)/m); None for i = 1."""
        if self.i == 1:
            return None
        return (self.k / self.m, (self.k + 0.5) / self.m, (self.k + 1.0) / self.m)


def haar_index(i: int) -> HaarIndex:
    if i < 1:
        raise ValueError(f"wavelet number must be >= 1, got {i}")
    if i == 1:
        return HaarIndex(i=1, j=0, k=0, m=1)
    j = int(np.log2(i - 1))
    m = 2 ** j
    k = i - m - 1
    assert 0 <= k < m
    return HaarIndex(i=i, j=j, k=k, m=m)


def psi(idx: HaarIndex, x):
    """Evaluate the idx-th Haar function: +1 / -1 on the two half-supports."""
    x = np.asarray(x, dtype=float)
    if idx.i == 1:
        return np.where((x >= 0.0) & (x < 1.0), 1.0, 0.0)
    z1, z2, z3 = idx.breakpoints
    out = np.zeros_like(x)
    out[(x >= z1) & (x < z2)] = 1.0
    out[(x >= z2) & (x < z3)] = -1.0
    return out


def haar_integral(n: int, idx: HaarIndex, x):
    """n-fold repeated integral R_{n,i}(x) of the idx-th Haar function."""
    if n < 1:
        raise ValueError(f"integration order must be >= 1, got {n}")
    x = np.asarray(x, dtype=float)
    if idx.i == 1:
        return x ** n / factorial(n)
    z1, z2, z3 = idx.breakpoints
    out = np.zeros_like(x)
    for zeta, coef in ((z1, 1.0), (z2, -2.0), (z3, 1.0)):
        mask = x >= zeta
        out[mask] += coef * (x[mask] - zeta) ** n
    return out / factorial(n)


def _require_power_of_two(M: int, label: str):
    if M < 1 or (M & (M - 1)) != 0:
        raise ValueError(f"{label} must be a power of two, got {M}")


def collocation_nodes(M1: int, M2: int):
    """Midpoint nodes x_l = (l - 1/2)/(2 M), l = 1..2M, in each direction."""
    _require_power_of_two(M1, "M1")
    _require_power_of_two(M2, "M2")
    x = (np.arange(1, 2 * M1 + 1) - 0.5) / (2.0 * M1)
    y = (np.arange(1, 2 * M2 + 1) - 0.5) / (2.0 * M2)
    return x, y


def _basis_tables(M: int, nodes: np.ndarray):
    """Stack psi, R1, R2 at the nodes and R2 at 1 for wavelets i = 1..2M."""
    S = 2 * M
    H = np.empty((S, len(nodes)))
    R1 = np.empty_like(H)
    R2 = np.empty_like(H)
    R2_at_1 = np.empty(S)
    one = np.array(1.0)
    for row in range(S):
        idx = haar_index(row + 1)
        H[row] = psi(idx, nodes)
        R1[row] = haar_integral(1, idx, nodes)
        R2[row] = haar_integral(2, idx, nodes)
        R2_at_1[row] = float(haar_integral(2, idx, one))
    return H, R1, R2, R2_at_1


def level_scales(M: int) -> np.ndarray:
    """2^j per wavelet i = 1..2M; inverts the midpoint Gram diag(2^-j)."""
    return np.array([2.0 ** haar_index(i).j for i in range(1, 2 * M + 1)])


@dataclass(frozen=True)
class WaveletSystem2D:
    """Precomputed basis/integral tables on the tensor collocation grid.

    All arrays are (basis, node)-shaped: H holds psi values, R1/R2 the first
    and second repeated integrals, Q2 = R2(x_l) - x_l * R2(1) realizes a
    function vanishing at both ends from its second derivative, and
    Q1 = R1(x_l) - R2(1) is the matching first-integral table.
    """

    J1: int
    J2: int
    M1: int
    M2: int
    x: np.ndarray
    y: np.ndarray
    Hx: np.ndarray
    Hy: np.ndarray
    R1x: np.ndarray
    R1y: np.ndarray
    R2x: np.ndarray
    R2y: np.ndarray
    R2x_at_1: np.ndarray
    R2y_at_1: np.ndarray
    Q1x: np.ndarray
    Q1y: np.ndarray
    Q2x: np.ndarray
    Q2y: np.ndarray


def make_wavelet_system(J1: int, J2: int) -> WaveletSystem2D:
    M1, M2 = 2 ** J1, 2 ** J2
    x, y = collocation_nodes(M1, M2)
    Hx, R1x, R2x, R2x1 = _basis_tables(M1, x)
    Hy, R1y, R2y, R2y1 = _basis_tables(M2, y)
    if not all(np.all(np.isfinite(a)) for a in (Hx, Hy, R1x, R1y, R2x, R2y, R2x1, R2y1)):
        raise FloatingPointError("non-finite entries in the wavelet tables")
    Q2x = R2x - R2x1[:, None] * x[None, :]
    Q2y = R2y - R2y1[:, None] * y[None, :]
    Q1x = R1x - R2x1[:, None]
    Q1y = R1y - R2y1[:, None]
    return WaveletSystem2D(J1=J1, J2=J2, M1=M1, M2=M2, x=x, y=y,
                           Hx=Hx, Hy=Hy, R1x=R1x, R1y=R1y, R2x=R2x, R2y=R2y,
                           R2x_at_1=R2x1, R2y_at_1=R2y1,
                           Q1x=Q1x, Q1y=Q1y, Q2x=Q2x, Q2y=Q2y)


def decompose_2d(fn, J1: int, J2: int) -> np.ndarray:
    """Coefficients D with z(x,y) ~ sum_{i1,i2} D[i1,i2] psi_{i1}(x) psi_{i2}(y).

    Computed from midpoint sums on the collocation grid, which are exact for
    the discontinuous basis; the returned coefficients reproduce any z in the
    span of the first (2 M1) x (2 M2) wavelets at the collocation nodes.
    """
    M1, M2 = 2 ** J1, 2 ** J2
    x, y = collocation_nodes(M1, M2)
    X, Y = np.meshgrid(x, y, indexing="ij")
    Z = np.broadcast_to(np.asarray(fn(X, Y), dtype=float), X.shape)
    Hx, _, _, _ = _basis_tables(M1, x)
    Hy, _, _, _ = _basis_tables(M2, y)
    raw = Hx @ Z @ Hy.T / (4.0 * M1 * M2)  # midpoint approximation of the L2 pairing
    return level_scales(M1)[:, None] * raw * level_scales(M2)[None, :]


def reconstruct_2d(D: np.ndarray, J1: int, J2: int) -> np.ndarray:
    """Evaluate the expansion with coefficients D at the collocation nodes."""
    M1, M2 = 2 ** J1, 2 ** J2
    x, y = collocation_nodes(M1, M2)
    Hx, _, _, _ = _basis_tables(M1, x)
    Hy, _, _, _ = _basis_tables(M2, y)
    return Hx.T @ np.asarray(D, dtype=float) @ Hy
