"""Tests for the tridiagonal and dense linear solvers."""

import numpy as np
import pytest

from fracint.linalg import (Tridiag, ZeroPivotError, dense_lu_factor,
                            dense_lu_solve, thomas_solve)


def _random_dd_tridiag(rng, n):
    """Diagonally dominant tridiagonal system (safe for no-pivot elimination)."""
    sub = rng.standard_normal(n - 1)
    sup = rng.standard_normal(n - 1)
    diag = 4.0 + np.abs(rng.standard_normal(n))
    return Tridiag(sub=sub, diag=diag, sup=sup)


def test_to_dense_and_matvec_agree():
    rng = np.random.default_rng(0)
    A = _random_dd_tridiag(rng, 7)
    x = rng.standard_normal(7)
    assert np.allclose(A.matvec(x), A.to_dense() @ x, atol=1e-14)


@pytest.mark.parametrize("n", [2, 5, 50, 400])
def test_thomas_matches_dense_lu(n):
    rng = np.random.default_rng(n)
    A = _random_dd_tridiag(rng, n)
    rhs = rng.standard_normal(n)
    x_thomas = thomas_solve(A, rhs)
    x_dense = dense_lu_solve(dense_lu_factor(A.to_dense()), rhs)
    assert np.max(np.abs(x_thomas - x_dense)) < 1e-10
    assert np.max(np.abs(A.matvec(x_thomas) - rhs)) < 1e-10


def test_thomas_zero_pivot_raises():
    A = Tridiag(sub=np.array([1.0]), diag=np.array([0.0, 1.0]),
                sup=np.array([1.0]))
    with pytest.raises(ZeroPivotError):
        thomas_solve(A, np.array([1.0, 1.0]))


def test_dense_lu_rejects_singular():
    with pytest.raises(Exception):
        F = dense_lu_factor(np.zeros((3, 3)))
        dense_lu_solve(F, np.ones(3))


def test_dense_lu_reuse_multiple_rhs():
    rng = np.random.default_rng(3)
    A = rng.standard_normal((20, 20)) + 20.0 * np.eye(20)
    F = dense_lu_factor(A)
    for _ in range(4):
        b = rng.standard_normal(20)
        x = dense_lu_solve(F, b)
        assert np.max(np.abs(A @ x - b)) < 1e-9
