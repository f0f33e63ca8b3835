"""Solvers for time-fractional integro-partial differential equations.

1D problems are handled by finite differences in space with either the
offset-node (order 3 - alpha) or the classical L1 (order 2 - alpha) Caputo
discretization in time; 2D problems use Haar-wavelet collocation in space.
"""

from .analysis import (ConvergenceReport, double_mesh_error, errors_2d,
                       max_error, run_ladder)
from .core_types import (Problem1D, Problem2D, SolutionField,
                         make_spatial_grid, make_temporal_grid,
                         validate_problem_1d, validate_problem_2d)
from .problems import available, example
from .solver1d import (SIGMA_AS_PRINTED, SIGMA_QUAD_CONSISTENT, solve_l1,
                       solve_l2sigma)
from .solver2d import solve_2d

__all__ = [
    "ConvergenceReport", "Problem1D", "Problem2D", "SolutionField",
    "SIGMA_AS_PRINTED", "SIGMA_QUAD_CONSISTENT",
    "available", "double_mesh_error", "errors_2d", "example",
    "make_spatial_grid", "make_temporal_grid", "max_error", "run_ladder",
    "solve_2d", "solve_l1", "solve_l2sigma",
    "validate_problem_1d", "validate_problem_2d",
]

__version__ = "1.0.0"
