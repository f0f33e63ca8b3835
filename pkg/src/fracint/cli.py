"""Command-line front end: solvers, convergence ladders and table reproduction.

Subcommands
-----------
solve1d          run one 1D solve and emit an (x, t, value) CSV
solve2d          run one 2D solve and emit an (x, y, t, value) CSV
ladder           refinement study for one scheme (CSV and/or JSON report)
compare          side-by-side refinement study of both 1D schemes
reproduce-table  regenerate one of the eight benchmark convergence tables

Configuration comes from an optional JSON file (--config) merged with command
line flags; flags win and unknown config keys are rejected.  Exit codes:
0 success, 2 configuration error, 3 problem-validation failure, 4 numeric
failure.  On failure a machine-readable JSON error object is printed to
stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from datetime import datetime, timezone

import numpy as np

from .analysis import errors_2d, max_error, run_ladder
from .core_types import (Problem1D, Problem2D, make_spatial_grid,
                         validate_problem_1d, validate_problem_2d)
from .linalg import ZeroPivotError
from .problems import available, example
from .solver1d import (DEFAULT_SIGMA_MODE, SIGMA_AS_PRINTED,
                       SIGMA_QUAD_CONSISTENT, solve_l1, solve_l2sigma)
from .solver2d import solve_2d

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_VALIDATION = 3
EXIT_NUMERIC = 4


class ConfigError(Exception):
    """Bad command line, config file, or parameter combination."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 2
        raise ConfigError(message)


# ---------------------------------------------------------------------------
# inline problem specifications (JSON config only)

_SAFE_NAMES = {
    name: getattr(np, name)
    for name in ("sin", "cos", "tan", "sinh", "cosh", "tanh", "exp", "log",
                 "sqrt", "abs", "pi", "e", "minimum", "maximum", "where")
}
_SAFE_NAMES["gamma"] = np.vectorize(math.gamma)


def _compile_expr(expr, variables):
    """Compile a scalar expression string into a vectorized callable."""
    if not isinstance(expr, (str, int, float)):
        raise ConfigError(f"expected an expression string, got {expr!r}")
    code = compile(str(expr), "<config>", "eval")
    for name in code.co_names:
        if name not in _SAFE_NAMES and name not in variables:
            raise ConfigError(f"unknown name {name!r} in expression {expr!r}")

    def fn(*args):
        scope = dict(zip(variables, args))
        return eval(code, {"__builtins__": {}}, {**_SAFE_NAMES, **scope})

    return fn


def _inline_problem_1d(spec: dict, alpha: float) -> Problem1D:
    required = {"p", "q", "r", "mu", "kernel", "f", "g", "h1", "h2"}
    optional = {"exact", "L", "T", "name"}
    unknown = set(spec) - required - optional
    if unknown:
        raise ConfigError(f"unknown inline problem keys: {sorted(unknown)}")
    missing = required - set(spec)
    if missing:
        raise ConfigError(f"inline problem missing keys: {sorted(missing)}")
    ex = spec.get("exact")
    return Problem1D(
        p=_compile_expr(spec["p"], ("x",)),
        q=_compile_expr(spec["q"], ("x",)),
        r=_compile_expr(spec["r"], ("x",)),
        mu=float(spec["mu"]),
        kernel=_compile_expr(spec["kernel"], ("x", "s")),
        f=_compile_expr(spec["f"], ("x", "t")),
        g=_compile_expr(spec["g"], ("x",)),
        h1=_compile_expr(spec["h1"], ("t",)),
        h2=_compile_expr(spec["h2"], ("t",)),
        L=float(spec.get("L", 1.0)),
        T=float(spec.get("T", 1.0)),
        alpha=alpha,
        exact=None if ex is None else _compile_expr(ex, ("x", "t")),
        name=str(spec.get("name", "inline")),
    )


def _inline_problem_2d(spec: dict, alpha: float) -> Problem2D:
    required = {"p1", "p2", "q1", "q2", "r1", "mu", "kernel", "f", "g",
                "h1", "h2", "h3", "h4"}
    optional = {"exact", "T", "name",
                "h1_y", "h1_yy", "h2_y", "h2_yy",
                "h3_x", "h3_xx", "h4_x", "h4_xx"}
    unknown = set(spec) - required - optional
    if unknown:
        raise ConfigError(f"unknown inline problem keys: {sorted(unknown)}")
    missing = required - set(spec)
    if missing:
        raise ConfigError(f"inline problem missing keys: {sorted(missing)}")
    kwargs = dict(
        p1=_compile_expr(spec["p1"], ("x", "y")),
        p2=_compile_expr(spec["p2"], ("x", "y")),
        q1=_compile_expr(spec["q1"], ("x", "y")),
        q2=_compile_expr(spec["q2"], ("x", "y")),
        r1=_compile_expr(spec["r1"], ("x", "y")),
        mu=float(spec["mu"]),
        kernel=_compile_expr(spec["kernel"], ("x", "y", "s")),
        f=_compile_expr(spec["f"], ("x", "y", "t")),
        g=_compile_expr(spec["g"], ("x", "y")),
        h1=_compile_expr(spec["h1"], ("y", "t")),
        h2=_compile_expr(spec["h2"], ("y", "t")),
        h3=_compile_expr(spec["h3"], ("x", "t")),
        h4=_compile_expr(spec["h4"], ("x", "t")),
        T=float(spec.get("T", 1.0)),
        alpha=alpha,
        name=str(spec.get("name", "inline")),
    )
    for key in ("h1_y", "h1_yy", "h2_y", "h2_yy"):
        if key in spec:
            kwargs[key] = _compile_expr(spec[key], ("y", "t"))
    for key in ("h3_x", "h3_xx", "h4_x", "h4_xx"):
        if key in spec:
            kwargs[key] = _compile_expr(spec[key], ("x", "t"))
    ex = spec.get("exact")
    if ex is not None:
        kwargs["exact"] = _compile_expr(ex, ("x", "y", "t"))
    return Problem2D(**kwargs)


def _resolve_problem(args, two_d: bool):
    if getattr(args, "inline_problem", None) is not None:
        spec = args.inline_problem
        if not isinstance(spec, dict):
            raise ConfigError("inline problem spec must be a JSON object")
        maker = _inline_problem_2d if two_d else _inline_problem_1d
        return maker(spec, args.alpha)
    name = args.problem
    if name is None:
        raise ConfigError("a problem name (--problem) or inline spec is required")
    if name not in available():
        raise ConfigError(
            f"unknown problem {name!r}; available: {', '.join(available())}")
    prob = example(name, args.alpha)
    if two_d != isinstance(prob, Problem2D):
        want = "2D" if two_d else "1D"
        raise ConfigError(f"problem {name!r} is not a {want} problem")
    return prob


# ---------------------------------------------------------------------------
# config merging

def _load_config(args, parser_dests: set):
    if args.config is None:
        return args
    try:
        with open(args.config, "r") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config file {args.config}: {exc}")
    if not isinstance(cfg, dict):
        raise ConfigError("config file must hold a JSON object")
    unknown = set(cfg) - parser_dests
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    for key, value in cfg.items():
        # flags given on the command line win over config values
        if key in args._explicit:
            continue
        setattr(args, key, value)
    return args


def _track_explicit(argv, actions, args):
    """Record which dests were set on the command line (they beat config)."""
    explicit = set()
    seen = set(argv)
    for action in actions:
        if any(opt in seen for opt in action.option_strings):
            explicit.add(action.dest)
    args._explicit = explicit
    return args


# ---------------------------------------------------------------------------
# output helpers

_FMT = ".17g"


def _fmt(x) -> str:
    return format(float(x), _FMT)


def _emit(text: str, out_path, timestamp: bool):
    if timestamp:
        stamp = datetime.now(timezone.utc).isoformat()
        text = f"# generated {stamp}\n" + text
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _validate_or_raise(prob, override: bool, sgrid=None):
    if isinstance(prob, Problem2D):
        report = validate_problem_2d(prob)
    else:
        report = validate_problem_1d(prob, sgrid)
    if not report and not override:
        raise ValueError("problem validation failed: " + "; ".join(report.violations))


# ---------------------------------------------------------------------------
# subcommand implementations

def _cmd_solve1d(args):
    prob = _resolve_problem(args, two_d=False)
    _validate_or_raise(prob, args.override_validation,
                       make_spatial_grid(prob.L, args.M))
    if args.scheme == "l1":
        fld = solve_l1(prob, args.M, args.N,
                       override_validation=args.override_validation)
    else:
        fld = solve_l2sigma(prob, args.M, args.N, sigma_mode=args.sigma_mode,
                            override_validation=args.override_validation)
    rows = []
    for i, xv in enumerate(fld.x):
        for k, tv in enumerate(fld.t):
            rows.append((_fmt(xv), _fmt(tv), _fmt(fld.values[i, k])))
    _emit(_csv(("x", "t", "value"), rows), args.out, not args.no_timestamp)
    if prob.exact is not None and not args.quiet:
        print(f"max error vs exact: {max_error(fld, prob.exact):.6e}",
              file=sys.stderr)
    return EXIT_OK


def _cmd_solve2d(args):
    prob = _resolve_problem(args, two_d=True)
    _validate_or_raise(prob, args.override_validation)
    if args.N is None:
        if args.dt is None:
            raise ConfigError("solve2d needs --N or --dt")
        steps = prob.T / args.dt
        args.N = int(round(steps))
        if abs(steps - args.N) > 1e-9:
            raise ConfigError("--dt must divide the final time evenly")
    J2 = args.J2 if args.J2 is not None else args.J1
    fld = solve_2d(prob, args.J1, J2, args.N,
                   memory_tail=args.memory_tail,
                   override_validation=args.override_validation)
    rows = []
    for i, xv in enumerate(fld.x):
        for j, yv in enumerate(fld.y):
            for k, tv in enumerate(fld.t):
                rows.append((_fmt(xv), _fmt(yv), _fmt(tv),
                             _fmt(fld.values[i, j, k])))
    _emit(_csv(("x", "y", "t", "value"), rows), args.out, not args.no_timestamp)
    if prob.exact is not None and not args.quiet:
        linf, l2 = errors_2d(fld, prob.exact)
        print(f"errors vs exact: linf={linf:.6e} l2={l2:.6e}", file=sys.stderr)
    return EXIT_OK


def _parse_rungs(text):
    rungs = []
    for part in str(text).split(","):
        try:
            m, n = part.strip().split(":")
            rungs.append((int(m), int(n)))
        except ValueError:
            raise ConfigError(
                f"bad rung {part!r}; expected M:N pairs like 16:32,32:64")
    if not rungs:
        raise ConfigError("at least one rung is required")
    return rungs


def _report_rows(report):
    """Deterministic CSV rows of a ladder report (timings omitted)."""
    norms = sorted({k for r in report.rungs for k in r.errors})
    header = ["problem", "scheme", "alpha", "M", "N"]
    for norm in norms:
        header += [f"error_{norm}", f"order_{norm}"]
    header.append("failure")
    rows = []
    for r in report.rungs:
        row = [report.problem, report.scheme, _fmt(report.alpha), r.M, r.N]
        for norm in norms:
            row.append(_fmt(r.errors[norm]) if norm in r.errors else "")
            row.append(_fmt(r.orders[norm]) if norm in r.orders else "")
        row.append(r.failure or "")
        rows.append(row)
    return header, rows


def _cmd_ladder(args):
    two_d = args.scheme == "haar-2d"
    prob = _resolve_problem(args, two_d=two_d)
    rungs = _parse_rungs(args.rungs)
    scheme = "l2-1sigma" if two_d else args.scheme
    report = run_ladder(prob, scheme, rungs, sigma_mode=args.sigma_mode,
                        parallel=args.parallel)
    failures = [r.failure for r in report.rungs if r.failure]
    header, rows = _report_rows(report)
    _emit(_csv(header, rows), args.out, not args.no_timestamp)
    if args.json_out:
        with open(args.json_out, "w", newline="") as fh:
            fh.write(report.to_json() + "\n")
    if failures:
        raise RuntimeError("ladder rung failures: " + "; ".join(failures))
    return EXIT_OK


def _cmd_compare(args):
    prob = _resolve_problem(args, two_d=False)
    rungs = _parse_rungs(args.rungs)
    reports = {
        scheme: run_ladder(prob, scheme, rungs, sigma_mode=args.sigma_mode,
                           parallel=args.parallel)
        for scheme in ("l2-1sigma", "l1")
    }
    header = ["problem", "alpha", "M", "N", "dt",
              "l2-1sigma_error", "l2-1sigma_order", "l1_error", "l1_order"]
    rows = []
    failures = []
    for idx, (M, N) in enumerate(rungs):
        row = [prob.name, _fmt(prob.alpha), M, N, _fmt(prob.T / N)]
        for scheme in ("l2-1sigma", "l1"):
            rung = reports[scheme].rungs[idx]
            if rung.failure:
                failures.append(f"{scheme} {M}:{N}: {rung.failure}")
                row += ["", ""]
            else:
                row.append(_fmt(rung.errors["max"]))
                row.append(_fmt(rung.orders["max"]) if rung.orders else "")
        rows.append(row)
    _emit(_csv(header, rows), args.out, not args.no_timestamp)
    if failures:
        raise RuntimeError("comparison rung failures: " + "; ".join(failures))
    return EXIT_OK


# benchmark table layouts: rungs are (M, N) with M the spatial interval count
# (1D) or the per-direction resolution exponent J (2D); printed rates sit on
# the coarse row of each adjacent pair.
_RUNGS_HALF_M = [(16, 32), (32, 64), (64, 128), (128, 256), (256, 512)]
_RUNGS_HALF_M_BIG = [(32, 64), (64, 128), (128, 256), (256, 512), (512, 1024)]
_RUNGS_EQUAL = [(32, 32), (64, 64), (128, 128), (256, 256), (512, 512)]
_RUNGS_DOUBLE_MESH = [(32, 16), (64, 32), (128, 64), (256, 128), (512, 256)]

TABLES = {
    1: {"kind": "multi-alpha", "problem": "example1", "scheme": "l2-1sigma",
        "alphas": (0.2, 0.5, 0.8), "rungs": _RUNGS_HALF_M, "label": "N/M"},
    2: {"kind": "compare", "problem": "example1",
        "alphas": (0.1, 0.9), "rungs": _RUNGS_HALF_M_BIG, "label": "N/M"},
    3: {"kind": "compare", "problem": "example2",
        "alphas": (0.3, 0.6, 0.9), "rungs": _RUNGS_EQUAL, "label": "N=M"},
    4: {"kind": "compare", "problem": "example2",
        "alphas": (0.2, 0.5, 0.8), "rungs": _RUNGS_HALF_M, "label": "N/M"},
    5: {"kind": "multi-alpha", "problem": "example3", "scheme": "l2-1sigma",
        "alphas": (0.3, 0.6, 0.9), "rungs": _RUNGS_DOUBLE_MESH,
        "label": "N/M"},
    6: {"kind": "2d", "problem": "example4", "alpha": 0.2, "J": 3,
        "Ns": (5, 10, 20, 40)},
    7: {"kind": "2d", "problem": "example4", "alpha": 0.4, "J": 4,
        "Ns": (5, 10, 20, 40)},
    8: {"kind": "2d", "problem": "example4", "alpha": 0.8, "J": 4,
        "Ns": (5, 10, 20, 40)},
}


def _rate_on_coarse(errors):
    """log2 error ratios placed on the coarse row; blank on the finest."""
    rates = []
    for e0, e1 in zip(errors, errors[1:]):
        rates.append(_fmt(math.log2(e0 / e1)) if e0 > 0 and e1 > 0 else "")
    rates.append("")
    return rates


def _ladder_errors(prob, scheme, rungs, sigma_mode, parallel):
    report = run_ladder(prob, scheme, rungs, sigma_mode=sigma_mode,
                        parallel=parallel)
    bad = [r.failure for r in report.rungs if r.failure]
    if bad:
        raise RuntimeError("table rung failures: " + "; ".join(bad))
    return [r.errors["max"] for r in report.rungs]


def table_rows(table_id: int, sigma_mode: str = DEFAULT_SIGMA_MODE,
               parallel: bool = False):
    """Header and rows of one benchmark table (errors and rates as strings)."""
    if table_id not in TABLES:
        raise ConfigError(f"unknown table id {table_id}; valid: 1-8")
    spec = TABLES[table_id]
    if spec["kind"] == "multi-alpha":
        header = [spec["label"]]
        columns = []
        for alpha in spec["alphas"]:
            prob = example(spec["problem"], alpha)
            errs = _ladder_errors(prob, spec["scheme"], spec["rungs"],
                                  sigma_mode, parallel)
            columns.append(([_fmt(e) for e in errs], _rate_on_coarse(errs)))
            header += [f"alpha={alpha}_error", f"alpha={alpha}_rate"]
        rows = []
        for i, (M, N) in enumerate(spec["rungs"]):
            row = [f"{N}/{M}"]
            for errs, rates in columns:
                row += [errs[i], rates[i]]
            rows.append(row)
        return header, rows
    if spec["kind"] == "compare":
        header = ["alpha", spec["label"],
                  "l2-1sigma_error", "l2-1sigma_rate", "l1_error", "l1_rate"]
        rows = []
        for alpha in spec["alphas"]:
            prob = example(spec["problem"], alpha)
            by_scheme = {}
            for scheme in ("l2-1sigma", "l1"):
                errs = _ladder_errors(prob, scheme, spec["rungs"],
                                      sigma_mode, parallel)
                by_scheme[scheme] = ([_fmt(e) for e in errs],
                                     _rate_on_coarse(errs))
            for i, (M, N) in enumerate(spec["rungs"]):
                label = f"{N}" if spec["label"] == "N=M" else f"{N}/{M}"
                rows.append([_fmt(alpha), label,
                             by_scheme["l2-1sigma"][0][i],
                             by_scheme["l2-1sigma"][1][i],
                             by_scheme["l1"][0][i],
                             by_scheme["l1"][1][i]])
        return header, rows
    # 2D table: one wavelet resolution, a dt ladder, both error norms
    prob = example(spec["problem"], spec["alpha"])
    header = ["dt", "l2_error", "l2_rate", "linf_error", "linf_rate"]
    linfs, l2s = [], []
    for N in spec["Ns"]:
        fld = solve_2d(prob, spec["J"], spec["J"], N)
        linf, l2 = errors_2d(fld, prob.exact)
        linfs.append(linf)
        l2s.append(l2)
    l2_rates = _rate_on_coarse(l2s)
    linf_rates = _rate_on_coarse(linfs)
    rows = []
    for i, N in enumerate(spec["Ns"]):
        rows.append([f"1/{N}", _fmt(l2s[i]), l2_rates[i],
                     _fmt(linfs[i]), linf_rates[i]])
    return header, rows


def _cmd_reproduce_table(args):
    header, rows = table_rows(args.id, sigma_mode=args.sigma_mode,
                              parallel=args.parallel)
    _emit(_csv(header, rows), args.out, not args.no_timestamp)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def _add_common(sub):
    sub.add_argument("--config", help="JSON config file; flags override it")
    sub.add_argument("--out", help="output CSV path (default: stdout)")
    sub.add_argument("--no-timestamp", action="store_true",
                     help="omit the generated-at header line")
    sub.add_argument("--quiet", action="store_true",
                     help="suppress informational stderr output")


def _add_problem(sub, two_d=False):
    sub.add_argument("--problem", help="built-in problem name")
    sub.add_argument("--alpha", type=float, default=0.5,
                     help="fractional order in (0, 1)")
    sub.add_argument("--override-validation", action="store_true",
                     help="run even if the well-posedness checks fail")
    # inline problem specs are JSON-only; the dest exists so config files
    # can carry them under the key "inline_problem"
    sub.set_defaults(inline_problem=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="fracint",
                     description="Solvers for time-fractional "
                                 "integro-partial differential equations.")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    s1 = subs.add_parser("solve1d", help="run one 1D solve")
    _add_problem(s1)
    s1.add_argument("--M", type=int, default=32, help="spatial intervals")
    s1.add_argument("--N", type=int, default=32, help="time steps")
    s1.add_argument("--scheme", choices=("l2-1sigma", "l1"),
                    default="l2-1sigma")
    s1.add_argument("--sigma-mode", dest="sigma_mode",
                    choices=(SIGMA_AS_PRINTED, SIGMA_QUAD_CONSISTENT),
                    default=DEFAULT_SIGMA_MODE,
                    help="first-step handling of the memory quadrature")
    _add_common(s1)
    s1.set_defaults(func=_cmd_solve1d)

    s2 = subs.add_parser("solve2d", help="run one 2D solve")
    _add_problem(s2, two_d=True)
    s2.add_argument("--J1", type=int, default=3,
                    help="x-direction resolution exponent (2^(J1+1) nodes)")
    s2.add_argument("--J2", type=int, default=None,
                    help="y-direction resolution exponent (default: J1)")
    s2.add_argument("--N", type=int, default=None, help="time steps")
    s2.add_argument("--dt", type=float, default=None,
                    help="time step (alternative to --N)")
    s2.add_argument("--memory-tail", dest="memory_tail",
                    choices=("implicit-tail", "full-tail"),
                    default="implicit-tail",
                    help="partial-panel handling of the memory quadrature")
    _add_common(s2)
    s2.set_defaults(func=_cmd_solve2d)

    lad = subs.add_parser("ladder", help="refinement study for one scheme")
    _add_problem(lad)
    lad.add_argument("--scheme", choices=("l2-1sigma", "l1", "haar-2d"),
                     default="l2-1sigma")
    lad.add_argument("--rungs", default="16:32,32:64,64:128",
                     help="comma-separated M:N pairs (J:N for haar-2d)")
    lad.add_argument("--sigma-mode", dest="sigma_mode",
                     choices=(SIGMA_AS_PRINTED, SIGMA_QUAD_CONSISTENT),
                     default=DEFAULT_SIGMA_MODE)
    lad.add_argument("--parallel", action="store_true",
                     help="run rungs concurrently (FRACINT_THREADS caps workers)")
    lad.add_argument("--json-out", dest="json_out",
                     help="also write the full JSON report here")
    _add_common(lad)
    lad.set_defaults(func=_cmd_ladder)

    cmp_ = subs.add_parser("compare",
                           help="both 1D schemes on a shared ladder")
    _add_problem(cmp_)
    cmp_.add_argument("--rungs", default="16:32,32:64,64:128",
                      help="comma-separated M:N pairs")
    cmp_.add_argument("--sigma-mode", dest="sigma_mode",
                      choices=(SIGMA_AS_PRINTED, SIGMA_QUAD_CONSISTENT),
                      default=DEFAULT_SIGMA_MODE)
    cmp_.add_argument("--parallel", action="store_true")
    _add_common(cmp_)
    cmp_.set_defaults(func=_cmd_compare)

    rep = subs.add_parser("reproduce-table",
                          help="regenerate one benchmark table")
    rep.add_argument("--id", type=int, required=True, help="table number 1-8")
    rep.add_argument("--sigma-mode", dest="sigma_mode",
                     choices=(SIGMA_AS_PRINTED, SIGMA_QUAD_CONSISTENT),
                     default=DEFAULT_SIGMA_MODE)
    rep.add_argument("--parallel", action="store_true")
    _add_common(rep)
    rep.set_defaults(func=_cmd_reproduce_table)

    return parser


def _error_json(code: int, exc: BaseException) -> str:
    return json.dumps({"error": {"exit_code": code,
                                 "type": type(exc).__name__,
                                 "message": str(exc)}}, sort_keys=True)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        actions = list(parser._actions)
        for sub_action in parser._subparsers._group_actions:
            sub = sub_action.choices.get(args.subcommand)
            if sub is not None:
                actions += sub._actions
        _track_explicit(argv, actions, args)
        dests = {a.dest for a in actions}
        dests.add("inline_problem")
        dests -= {"help", "func", "config"}
        _load_config(args, dests)
        return args.func(args)
    except ConfigError as exc:
        print(_error_json(EXIT_CONFIG, exc), file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        code = EXIT_VALIDATION if "validation" in str(exc) else EXIT_CONFIG
        print(_error_json(code, exc), file=sys.stderr)
        return code
    except (FloatingPointError, ZeroPivotError, RuntimeError,
            OverflowError, ZeroDivisionError) as exc:
        print(_error_json(EXIT_NUMERIC, exc), file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
