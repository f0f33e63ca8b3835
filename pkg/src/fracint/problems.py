"""Built-in benchmark problems with manufactured sources."""

from __future__ import annotations

from math import gamma

import numpy as np

from .core_types import Problem1D, Problem2D


def _example1(alpha: float) -> Problem1D:
    """Diffusion with variable p = 1+x, reaction r = 1 and kernel s*sin(x).

    Exact solution (1 + t^(alpha+4)) sin(pi x); homogeneous boundaries.
    """
    a = alpha
    g4 = gamma(a + 5.0)

    def exact(x, t):
        return (1.0 + t ** (a + 4.0)) * np.sin(np.pi * x)

    def f(x, t):
        s = np.sin(np.pi * x)
        return (g4 / 24.0 * t ** 4 * s
                + np.pi ** 2 * (1.0 + t ** (a + 4.0)) * (1.0 + x) * s
                + (1.0 + t ** (a + 4.0)) * s
                + (t ** 2 / 2.0 + t ** (a + 6.0) / ((a + 5.0) * (a + 6.0)))
                * np.sin(x) * s)

    return Problem1D(
        p=lambda x: 1.0 + x,
        q=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        r=lambda x: np.ones_like(np.asarray(x, dtype=float)),
        mu=1.0,
        kernel=lambda x, s: s * np.sin(x),
        f=f,
        g=lambda x: np.sin(np.pi * x),
        h1=lambda t: np.zeros_like(np.asarray(t, dtype=float)),
        h2=lambda t: np.zeros_like(np.asarray(t, dtype=float)),
        L=1.0, T=1.0, alpha=a, exact=exact, name="example1")


def _example2(alpha: float) -> Problem1D:
    """Pure diffusion with kernel x*s and an inhomogeneous left boundary.

    Exact solution (1 - x^2)(t + t^(alpha+3)).
    """
    a = alpha
    g3 = gamma(a + 4.0)
    g2m = gamma(2.0 - a)

    def exact(x, t):
        return (1.0 - x ** 2) * (t + t ** (a + 3.0))

    def f(x, t):
        return ((1.0 - x ** 2) * (t ** (1.0 - a) / g2m + g3 / 6.0 * t ** 3)
                + 2.0 * (t + t ** (a + 3.0))
                + x * (1.0 - x ** 2)
                * (t ** 3 / 6.0 + t ** (a + 5.0) / ((a + 4.0) * (a + 5.0))))

    return Problem1D(
        p=lambda x: np.ones_like(np.asarray(x, dtype=float)),
        q=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        r=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        mu=1.0,
        kernel=lambda x, s: x * s,
        f=f,
        g=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        h1=lambda t: t + t ** (a + 3.0),
        h2=lambda t: np.zeros_like(np.asarray(t, dtype=float)),
        L=1.0, T=1.0, alpha=a, exact=exact, name="example2")


def _example3(alpha: float) -> Problem1D:
    """Exponential kernel e^(x s), reaction r = x; no closed-form solution."""
    a = alpha
    return Problem1D(
        p=lambda x: np.ones_like(np.asarray(x, dtype=float)),
        q=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        r=lambda x: np.asarray(x, dtype=float),
        mu=1.0,
        kernel=lambda x, s: np.exp(x * s),
        f=lambda x, t: x * t ** (4.0 + a),
        g=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        h1=lambda t: np.zeros_like(np.asarray(t, dtype=float)),
        h2=lambda t: np.zeros_like(np.asarray(t, dtype=float)),
        L=1.0, T=1.0, alpha=a, exact=None, name="example3")


def _example4(alpha: float) -> Problem2D:
    """2D convection-diffusion with kernel x*y*s and homogeneous boundaries.

    Exact solution (1 + t^(alpha+3)) x y (x-1)(y-1).
    """
    a = alpha
    g3 = gamma(a + 4.0)

    def shape(x, y):
        return x * y * (x - 1.0) * (y - 1.0)

    def exact(x, y, t):
        return (1.0 + t ** (a + 3.0)) * shape(x, y)

    def f(x, y, t):
        amp = 1.0 + t ** (a + 3.0)
        return (g3 / 6.0 * shape(x, y) * t ** 3
                - 2.0 * amp * (x ** 2 + y ** 2 - x - y)
                + amp * (2.0 * x - 1.0) * (y ** 2 - y)
                + (t ** 2 / 2.0 + t ** (a + 5.0) / ((a + 4.0) * (a + 5.0)))
                * x ** 2 * y ** 2 * (x - 1.0) * (y - 1.0))

    ones = lambda x, y: np.ones_like(np.asarray(x, dtype=float))
    zeros = lambda x, y: np.zeros_like(np.asarray(x, dtype=float))
    return Problem2D(
        p1=ones, p2=ones,
        q1=ones, q2=zeros,
        r1=zeros,
        mu=1.0,
        kernel=lambda x, y, s: x * y * s,
        f=f,
        g=shape,
        T=1.0, alpha=a, exact=exact, name="example4")


_CATALOG = {
    "example1": _example1,
    "example2": _example2,
    "example3": _example3,
    "example4": _example4,
}


def example(name: str, alpha: float):
    """Instantiate a built-in problem for the given fractional order."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0,1), got {alpha}")
    try:
        builder = _CATALOG[name]
    except KeyError:
        raise ValueError(
            f"unknown problem {name!r}; choose from {sorted(_CATALOG)}") from None
    return builder(alpha)


def available() -> list[str]:
    return sorted(_CATALOG)
