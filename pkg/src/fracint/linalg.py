"""Tridiagonal and dense solves used by the steppers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg


class ZeroPivotError(RuntimeError):
    """Raised when the pivot-free tridiagonal sweep breaks down."""


@dataclass(frozen=True)
class Tridiag:
    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray

    def __post_init__(self):
        n = len(self.diag)
        if len(self.sub) != n - 1 or len(self.sup) != n - 1:
            raise ValueError("inconsistent tridiagonal band lengths")

    def to_dense(self) -> np.ndarray:
        return (np.diag(self.diag) + np.diag(self.sub, -1) + np.diag(self.sup, 1))

    def matvec(self, x: np.ndarray) -> np.ndarray:
        y = self.diag * x
        y[:-1] += self.sup * x[1:]
        y[1:] += self.sub * x[:-1]
        return y


def thomas_solve(A: Tridiag, rhs: np.ndarray) -> np.ndarray:
    """Solve A x = rhs by the Thomas sweep (no pivoting).

    Intended for diagonally dominant systems; raises ZeroPivotError when a
    pivot collapses so callers can fall back to a dense factorization.
    """
    n = len(A.diag)
    rhs = np.asarray(rhs, dtype=float)
    if rhs.shape[0] != n:
        raise ValueError("rhs length does not match the matrix")
    scale = np.max(np.abs(A.diag)) + np.max(np.abs(A.sub), initial=0.0) \
        + np.max(np.abs(A.sup), initial=0.0)
    tiny = 1e-300 + 1e-14 * scale * np.finfo(float).eps
    c = np.empty(n - 1) if n > 1 else np.empty(0)
    d = np.empty(n)
    piv = A.diag[0]
    if abs(piv) <= tiny:
        raise ZeroPivotError("zero pivot in row 0; use dense_lu_factor instead")
    d[0] = rhs[0] / piv
    if n > 1:
        c[0] = A.sup[0] / piv
    for i in range(1, n):
        piv = A.diag[i] - A.sub[i - 1] * c[i - 1]
        if abs(piv) <= tiny:
            raise ZeroPivotError(f"zero pivot in row {i}; use dense_lu_factor instead")
        d[i] = (rhs[i] - A.sub[i - 1] * d[i - 1]) / piv
        if i < n - 1:
            c[i] = A.sup[i] / piv
    x = d
    for i in range(n - 2, -1, -1):
        x[i] -= c[i] * x[i + 1]
    return x


@dataclass(frozen=True)
class DenseLU:
    """Pivoted LU factors, reusable across right-hand sides."""

    lu: np.ndarray
    piv: np.ndarray


def dense_lu_factor(A: np.ndarray) -> DenseLU:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    lu, piv = scipy.linalg.lu_factor(A)
    if not np.all(np.isfinite(lu)):
        raise np.linalg.LinAlgError("matrix is singular to working precision")
    return DenseLU(lu=lu, piv=piv)


def dense_lu_solve(F: DenseLU, rhs: np.ndarray) -> np.ndarray:
    x = scipy.linalg.lu_solve((F.lu, F.piv), np.asarray(rhs, dtype=float))
    if not np.all(np.isfinite(x)):
        raise np.linalg.LinAlgError("linear solve produced non-finite values")
    return x
