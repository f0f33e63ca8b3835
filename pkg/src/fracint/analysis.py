"""Error norms, observed orders and refinement-ladder drivers."""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core_types import Problem1D, Problem2D, SolutionField
from .solver1d import DEFAULT_SIGMA_MODE, solve_l1, solve_l2sigma
from .solver2d import solve_2d


def max_error(numeric: SolutionField, exact) -> float:
    """Max nodal |exact - numeric| over the whole space-time grid."""
    if numeric.y is None:
        X, T = np.meshgrid(numeric.x, numeric.t, indexing="ij")
        ref = np.broadcast_to(np.asarray(exact(X, T), dtype=float), X.shape)
    else:
        X, Y, T = np.meshgrid(numeric.x, numeric.y, numeric.t, indexing="ij")
        ref = np.broadcast_to(np.asarray(exact(X, Y, T), dtype=float), X.shape)
    return float(np.max(np.abs(ref - numeric.values)))


def _solve_1d(prob: Problem1D, scheme: str, M: int, N: int,
              sigma_mode: str = DEFAULT_SIGMA_MODE) -> SolutionField:
    if scheme == "l2-1sigma":
        return solve_l2sigma(prob, M, N, sigma_mode=sigma_mode)
    if scheme == "l1":
        return solve_l1(prob, M, N)
    raise ValueError(f"unknown 1D scheme {scheme!r}")


def double_mesh_error(prob: Problem1D, scheme: str, M: int, N: int,
                      sigma_mode: str = DEFAULT_SIGMA_MODE) -> float:
    """Max coarse-node difference against the (2M, 2N) refinement."""
    coarse = _solve_1d(prob, scheme, M, N, sigma_mode)
    fine = _solve_1d(prob, scheme, 2 * M, 2 * N, sigma_mode)
    return float(np.max(np.abs(coarse.values - fine.values[::2, ::2])))


def errors_2d(numeric: SolutionField, exact,
              skip_initial: bool = False) -> tuple[float, float]:
    """(max, root-mean-square) error over the collocation nodes and time levels.

    By default every stored level enters the average, including the initial
    one whose error vanishes identically when the initial data is sampled
    exactly.  ``skip_initial`` restricts both norms to levels 1..N, shrinking
    the root-mean-square denominator from N+1 to N.
    """
    X, Y = np.meshgrid(numeric.x, numeric.y, indexing="ij")
    start = 1 if skip_initial else 0
    errs = np.empty_like(numeric.values[:, :, start:])
    for k, t in enumerate(numeric.t[start:]):
        ref = np.broadcast_to(np.asarray(exact(X, Y, t), dtype=float), X.shape)
        errs[:, :, k] = np.abs(ref - numeric.values[:, :, start + k])
    linf = float(np.max(errs))
    l2 = float(np.sqrt(np.mean(errs ** 2)))
    return linf, l2


def observed_order(err_coarse: float, err_fine: float) -> float:
    return math.log2(err_coarse / err_fine)


@dataclass
class LadderRung:
    """One refinement level of a convergence study."""

    M: int
    N: int
    errors: dict = field(default_factory=dict)
    orders: dict = field(default_factory=dict)
    seconds: float = 0.0
    failure: Optional[str] = None


@dataclass
class ConvergenceReport:
    problem: str
    scheme: str
    alpha: float
    sigma_mode: str
    error_metric: str
    rungs: list

    def to_json(self) -> str:
        payload = {
            "problem": self.problem,
            "scheme": self.scheme,
            "alpha": self.alpha,
            "sigma_mode": self.sigma_mode,
            "error_metric": self.error_metric,
            "rungs": [
                {"M": r.M, "N": r.N, "errors": r.errors, "orders": r.orders,
                 "seconds": r.seconds, "failure": r.failure}
                for r in self.rungs
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    def to_csv(self) -> str:
        norms = sorted({k for r in self.rungs for k in r.errors})
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["problem", "scheme", "alpha", "M", "N"]
        for norm in norms:
            header += [f"error_{norm}", f"order_{norm}"]
        header += ["seconds", "failure"]
        writer.writerow(header)
        for r in self.rungs:
            row = [self.problem, self.scheme, _fmt(self.alpha), r.M, r.N]
            for norm in norms:
                row.append(_fmt(r.errors[norm]) if norm in r.errors else "")
                row.append(_fmt(r.orders[norm]) if norm in r.orders else "")
            row += [_fmt(r.seconds), r.failure or ""]
            writer.writerow(row)
        return buf.getvalue()


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _worker_count() -> int:
    env = os.environ.get("FRACINT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _run_rung_1d(prob, scheme, M, N, sigma_mode):
    t0 = time.perf_counter()
    if prob.exact is not None:
        fld = _solve_1d(prob, scheme, M, N, sigma_mode)
        errs = {"max": max_error(fld, prob.exact)}
    else:
        errs = {"max": double_mesh_error(prob, scheme, M, N, sigma_mode)}
    return errs, time.perf_counter() - t0


def _run_rung_2d(prob, J, N):
    t0 = time.perf_counter()
    fld = solve_2d(prob, J, J, N)
    if prob.exact is None:
        raise ValueError("2D ladder requires an exact solution")
    linf, l2 = errors_2d(fld, prob.exact)
    return {"linf": linf, "l2": l2}, time.perf_counter() - t0


def run_ladder(prob, scheme: str, rungs, sigma_mode: str = DEFAULT_SIGMA_MODE,
               parallel: bool = False) -> ConvergenceReport:
    """Run each (M, N) rung, collect errors and adjacent observed orders.

    For 1D problems ``rungs`` holds (M, N) pairs and M is the interval count;
    for 2D problems M is the per-direction resolution exponent J (grid 2^(J+1)
    nodes each way).  A failed rung is recorded and the ladder continues.
    """
    rungs = list(rungs)
    if not rungs:
        raise ValueError("ladder must contain at least one rung")
    two_d = isinstance(prob, Problem2D)

    def job(mn):
        M, N = mn
        try:
            if two_d:
                return _run_rung_2d(prob, M, N)
            return _run_rung_1d(prob, scheme, M, N, sigma_mode)
        except Exception as exc:  # recorded per rung, ladder continues
            return exc

    if parallel and len(rungs) > 1:
        with ThreadPoolExecutor(max_workers=_worker_count()) as pool:
            outcomes = list(pool.map(job, rungs))
    else:
        outcomes = [job(mn) for mn in rungs]

    report_rungs = []
    for (M, N), outcome in zip(rungs, outcomes):
        if isinstance(outcome, Exception):
            report_rungs.append(LadderRung(M=M, N=N, failure=str(outcome)))
        else:
            errs, secs = outcome
            report_rungs.append(LadderRung(M=M, N=N, errors=errs, seconds=secs))
    for prev, cur in zip(report_rungs, report_rungs[1:]):
        for norm, e in cur.errors.items():
            if norm in prev.errors and prev.errors[norm] > 0.0 and e > 0.0:
                cur.orders[norm] = observed_order(prev.errors[norm], e)

    metric = "exact" if (two_d or prob.exact is not None) else "double-mesh"
    return ConvergenceReport(problem=prob.name, scheme=scheme, alpha=prob.alpha,
                             sigma_mode=sigma_mode if scheme == "l2-1sigma" else "",
                             error_metric=metric, rungs=report_rungs)
