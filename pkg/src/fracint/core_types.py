"""Grids, problem descriptions and solution containers shared by all solvers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

COMPAT_TOL = 1e-12


@dataclass(frozen=True)
class TemporalGrid:
    """Uniform time mesh on [0, T] with the fractional order and collocation offset.

    The offset sigma = 1 - alpha/2 places the implicit collocation point at
    t_n + sigma*dt inside each step.
    """

    T: float
    N: int
    alpha: float
    sigma: float
    dt: float

    def node(self, n):
        return n * self.dt

    def offset_node(self, n):
        return (n + self.sigma) * self.dt

    def nodes(self) -> np.ndarray:
        return np.arange(self.N + 1) * self.dt


@dataclass(frozen=True)
class SpatialGrid1D:
    """Uniform space mesh on [0, L] with M intervals."""

    L: float
    M: int
    dx: float

    def node(self, m):
        return m * self.dx

    def nodes(self) -> np.ndarray:
        return np.arange(self.M + 1) * self.dx


def make_temporal_grid(T: float, N: int, alpha: float) -> TemporalGrid:
    """Build a time mesh; sigma is fixed to 1 - alpha/2."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0,1), got {alpha}")
    if N < 1:
        raise ValueError(f"N must be a positive integer, got {N}")
    if T <= 0.0:
        raise ValueError(f"T must be positive, got {T}")
    sigma = 1.0 - alpha / 2.0
    return TemporalGrid(T=float(T), N=int(N), alpha=float(alpha),
                        sigma=sigma, dt=float(T) / int(N))


def make_spatial_grid(L: float, M: int) -> SpatialGrid1D:
    if M < 1:
        raise ValueError(f"M must be a positive integer, got {M}")
    if L <= 0.0:
        raise ValueError(f"L must be positive, got {L}")
    return SpatialGrid1D(L=float(L), M=int(M), dx=float(L) / int(M))


def _zero(*args):
    return np.zeros_like(np.asarray(args[0], dtype=float))


@dataclass(frozen=True)
class Problem1D:
    """One-dimensional problem data.

    The equation is
        D_t^alpha u - p u_xx + q u_x + r u + mu * int_0^t K(x, t-s) u(x, s) ds = f,
    on (0, L) x (0, T], with u(x,0) = g(x), u(0,t) = h1(t), u(L,t) = h2(t).
    All coefficient callables must accept numpy arrays.
    """

    p: Callable
    q: Callable
    r: Callable
    mu: float
    kernel: Callable  # kernel(x, elapsed)
    f: Callable       # f(x, t)
    g: Callable
    h1: Callable
    h2: Callable
    L: float = 1.0
    T: float = 1.0
    alpha: float = 0.5
    exact: Optional[Callable] = None  # exact(x, t) when known
    name: str = "custom"

    def check_compatibility(self, tol: float = COMPAT_TOL) -> list[str]:
        issues = []
        left = abs(float(self.g(np.array(0.0))) - float(self.h1(np.array(0.0))))
        right = abs(float(self.g(np.array(self.L))) - float(self.h2(np.array(0.0))))
        if left > tol:
            issues.append(f"g(0) != h1(0): |diff| = {left:.3e}")
        if right > tol:
            issues.append(f"g(L) != h2(0): |diff| = {right:.3e}")
        return issues


@dataclass(frozen=True)
class Problem2D:
    """Two-dimensional problem data on the unit square.

    The equation is
        D_t^alpha u - p1 u_xx - p2 u_yy + q1 u_x + q2 u_y + r1 u
            + mu * int_0^t K(x, y, t-s) u(x, y, s) ds = f(x, y, t),
    with u(x,y,0) = g, u(0,y,t) = h1(y,t), u(1,y,t) = h2(y,t),
    u(x,0,t) = h3(x,t), u(x,1,t) = h4(x,t).

    The wavelet solver consumes boundary derivatives analytically; when they
    are omitted they are taken to be identically zero (true for homogeneous
    boundary data).
    """

    p1: Callable
    p2: Callable
    q1: Callable
    q2: Callable
    r1: Callable
    mu: float
    kernel: Callable  # kernel(x, y, elapsed)
    f: Callable       # f(x, y, t)
    g: Callable
    h1: Callable = _zero
    h2: Callable = _zero
    h3: Callable = _zero
    h4: Callable = _zero
    # first/second tangential derivatives of the boundary data
    h1_y: Callable = _zero
    h1_yy: Callable = _zero
    h2_y: Callable = _zero
    h2_yy: Callable = _zero
    h3_x: Callable = _zero
    h3_xx: Callable = _zero
    h4_x: Callable = _zero
    h4_xx: Callable = _zero
    T: float = 1.0
    alpha: float = 0.5
    exact: Optional[Callable] = None  # exact(x, y, t)
    name: str = "custom2d"

    def check_compatibility(self, tol: float = COMPAT_TOL) -> list[str]:
        issues = []
        corners = [
            ("g(0,0) vs h1(0,0)", self.g(0.0, 0.0), self.h1(0.0, 0.0)),
            ("g(1,0) vs h3(1,0)", self.g(1.0, 0.0), self.h3(1.0, 0.0)),
            ("g(0,1) vs h4(0,0)", self.g(0.0, 1.0), self.h4(0.0, 0.0)),
            ("g(1,1) vs h2(1,0)", self.g(1.0, 1.0), self.h2(1.0, 0.0)),
        ]
        for label, a, b in corners:
            d = abs(float(a) - float(b))
            if d > tol:
                issues.append(f"{label}: |diff| = {d:.3e}")
        return issues


@dataclass(frozen=True)
class SolutionField:
    """Discrete solution samples.

    For 1D runs ``values`` has shape (M+1, N+1) (space x time).  For 2D
    collocation runs the shape is (2*M1, 2*M2, N+1).
    """

    values: np.ndarray
    x: np.ndarray
    t: np.ndarray
    y: Optional[np.ndarray] = None
    scheme: str = ""
    alpha: float = float("nan")

    def __post_init__(self):
        if not np.all(np.isfinite(self.values)):
            raise ValueError("solution field contains non-finite values")


@dataclass
class ValidationReport:
    passed: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.passed


def validate_problem_1d(prob: Problem1D, grid: SpatialGrid1D) -> ValidationReport:
    """Check the sign conditions and the mesh lower bound M > L*||q||_inf/(2*p0).

    The sup-norm of q and the lower bound of p are estimated from grid-node
    samples.  Returns a report; callers decide whether failure is fatal.
    """
    violations = []
    x = grid.nodes()
    p_vals = np.broadcast_to(np.asarray(prob.p(x), dtype=float), x.shape)
    q_vals = np.broadcast_to(np.asarray(prob.q(x), dtype=float), x.shape)
    r_vals = np.broadcast_to(np.asarray(prob.r(x), dtype=float), x.shape)
    for label, vals in (("p", p_vals), ("q", q_vals), ("r", r_vals)):
        if not np.all(np.isfinite(vals)):
            violations.append(f"{label} is non-finite at a grid node")
    p0 = float(np.min(p_vals))
    if p0 <= 0.0:
        violations.append(f"p must be strictly positive; min sampled value {p0:.3e}")
    if float(np.min(r_vals)) < 0.0:
        violations.append(f"r must be nonnegative; min sampled value {np.min(r_vals):.3e}")
    if prob.mu < 0.0:
        violations.append(f"mu must be nonnegative, got {prob.mu}")
    if p0 > 0.0:
        q_inf = float(np.max(np.abs(q_vals)))
        bound = grid.L * q_inf / (2.0 * p0)
        if not grid.M > bound:
            violations.append(
                f"mesh too coarse: need M > L*||q||_inf/(2*p0) = {bound:.6g}, got M = {grid.M}")
    violations.extend(prob.check_compatibility())
    return ValidationReport(passed=not violations, violations=violations)


def validate_problem_2d(prob: Problem2D, nx: int = 33, ny: int = 33) -> ValidationReport:
    """Sign conditions for the 2D coefficients, sampled on a lattice."""
    violations = []
    x = np.linspace(0.0, 1.0, nx)
    y = np.linspace(0.0, 1.0, ny)
    X, Y = np.meshgrid(x, y, indexing="ij")
    for label, fn, kind in (("p1", prob.p1, "pos"), ("p2", prob.p2, "pos"),
                            ("r1", prob.r1, "nonneg")):
        vals = np.broadcast_to(np.asarray(fn(X, Y), dtype=float), X.shape)
        lo = float(np.min(vals))
        if kind == "pos" and lo <= 0.0:
            violations.append(f"{label} must be strictly positive; min sampled value {lo:.3e}")
        if kind == "nonneg" and lo < 0.0:
            violations.append(f"{label} must be nonnegative; min sampled value {lo:.3e}")
    if prob.mu < 0.0:
        violations.append(f"mu must be nonnegative, got {prob.mu}")
    violations.extend(prob.check_compatibility())
    return ValidationReport(passed=not violations, violations=violations)
