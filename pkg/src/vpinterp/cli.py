"""Command-line front end.

Every data-producing command writes CSV: a ``# vp-interp v<version>
<command> <params>`` comment line, a header line, then rows with 17
significant digits. Exit codes: 0 success, 1 a ``--check`` comparison
failed, 2 invalid arguments, 3 numeric failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import io
import sys

import numpy as np

from . import __version__
from .analysis import (
    NonFiniteValueError,
    bound_violations,
    lagrange_sweep,
    lebesgue_sweep,
    make_grid,
)
from .basis import ChebyshevKind, make_nodes
from .filtered import VPParams
from .operators import JacobiWeight, lagrange_interpolate, vp_interpolate
from .reproduce import (
    LC_TABLE_ROWS,
    THETAS,
    check_error_panel,
    check_lc_table,
    error_panel,
    fundamental_figure,
    gibbs_figure,
    lc_figure,
    lc_table,
    pointwise_figure,
)
from .testfns import TestFunction, get_case, test_function_eval

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

PROGRAM = "vp-interp"


class UsageError(ValueError):
    pass


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, str):
        return value
    value = float(value)
    if not np.isfinite(value):
        raise NonFiniteValueError(f"non-finite value {value!r} in output")
    return f"{value:.17g}"


def render_csv(command: str, params: dict, header, rows) -> str:
    buf = io.StringIO(newline="")
    meta = " ".join(f"{k}={v}" for k, v in params.items())
    buf.write(f"# {PROGRAM} v{__version__} {command} {meta}".rstrip() + "\n")
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    return buf.getvalue()


def _emit(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {out}: {exc.strerror or exc}") from exc


def _report_checks(checks) -> int:
    for c in checks:
        print(c.line(), file=sys.stderr)
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} cells pass", file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


def _kind(args, default=None) -> ChebyshevKind:
    if args.kind is None:
        if default is None:
            raise UsageError("--kind is required")
        return default
    return ChebyshevKind.parse(args.kind)


def _weight(args, default: JacobiWeight | None = None) -> JacobiWeight:
    default = default or JacobiWeight()
    gamma = default.gamma if args.gamma is None else args.gamma
    delta = default.delta if args.delta is None else args.delta
    return JacobiWeight(gamma, delta)


def _positive(name, value, minimum=1):
    if value is not None and value < minimum:
        raise UsageError(f"--{name} must be >= {minimum}, got {value}")


def cmd_table_lc(args) -> int:
    n_max = args.n_max or 1000
    _positive("n-max", n_max, 10)
    _positive("grid", args.grid, 2)
    table = lc_table(n_max, args.grid)
    rows = [
        (kind.value, weight.gamma, weight.delta, *table[i])
        for i, (kind, weight) in enumerate(LC_TABLE_ROWS)
    ]
    header = ["kind", "gamma", "delta", *[f"theta={t:g}" for t in THETAS]]
    _emit(render_csv("table-lc", {"n_max": n_max, "n_step": 10, "grid": args.grid}, header, rows), args.out)
    return _report_checks(check_lc_table(table)) if args.check else EXIT_OK


def cmd_table_errors(args) -> int:
    _positive("grid", args.grid, 2)
    rows = error_panel(args.panel, args.grid)
    header = ["function", "n", "m", "vp_error", "lagrange_error"]
    _emit(render_csv("table-errors", {"panel": args.panel, "grid": args.grid}, header, rows), args.out)
    return _report_checks(check_error_panel(rows)) if args.check else EXIT_OK


def cmd_figure(args) -> int:
    fig = args.id
    if fig == "fund":
        n = args.n or 30
        kind = _kind(args, ChebyshevKind.W1)
        k = (n + 1) // 2
        ms, t, values = fundamental_figure(n, k, kind, args.grid)
        header = ["t", "x", *[f"m={m}" for m in ms]]
        rows = [(ti, np.cos(ti), *vals) for ti, vals in zip(t, values)]
        params = {"id": fig, "kind": kind.value, "n": n, "k": k, "grid": args.grid}
    elif fig == "lc":
        kinds = None if args.kind is None else [args.kind]
        n_max = args.n_max or 1024
        ns = [n for n in (16, 32, 64, 128, 256, 512, 1024, 2048, 4096) if n <= n_max]
        if not ns:
            raise UsageError("--n-max must be at least 16")
        theta = 0.5 if args.theta is None else args.theta
        rows = lc_figure(kinds, ns, theta, args.grid)
        header = ["kind", "gamma", "delta", "bounded", "n", "m", "lc"]
        params = {"id": fig, "theta": theta, "n_max": n_max, "grid": args.grid}
    elif fig == "pointwise":
        fid = TestFunction.parse(args.func or "f3")
        if fid not in (TestFunction.F3, TestFunction.F5):
            raise UsageError("pointwise figure supports --func f3 or f5")
        x, err_lag, err_vp = pointwise_figure(fid, args.n, args.theta, args.grid)
        header = ["x", "weighted_error_lagrange", "weighted_error_vp"]
        rows = zip(x, err_lag, err_vp)
        params = {"id": fig, "func": fid.value, "grid": args.grid}
    elif fig == "gibbs":
        n = args.n or 50
        x, values = gibbs_figure(n, base_count=args.grid)
        header = ["x", "u_f5", f"u_L{n}", *[f"u_V{n}_theta={t:g}" for t in (0.4, 0.6, 0.8)]]
        rows = [(xi, *vals) for xi, vals in zip(x, values)]
        params = {"id": fig, "n": n, "grid": args.grid}
    else:  # argparse restricts choices; kept for direct callers
        raise UsageError(f"unknown figure id {fig!r}")
    _emit(render_csv("figure", params, header, rows), args.out)
    return EXIT_OK


def cmd_check_bounds(args) -> int:
    kind = _kind(args)
    weight = _weight(args)
    vp = bound_violations(kind, weight, "vp")
    lag = bound_violations(kind, weight, "lagrange")
    lines = [f"kind={kind.value} gamma={weight.gamma:g} delta={weight.delta:g}"]
    lines.append("VP: bounded" if not vp else f"VP: unbounded (violated: {', '.join(vp)})")
    lines.append(
        "Lagrange: log-growth regime" if not lag else f"Lagrange: outside log-growth regime (violated: {', '.join(lag)})"
    )
    text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_lebesgue(args) -> int:
    kind = _kind(args)
    weight = _weight(args)
    _positive("grid", args.grid, 2)
    if args.n is not None:
        _positive("n", args.n, 1)
        ns = [args.n]
    else:
        n_max = args.n_max or 1000
        _positive("n-max", n_max, 10)
        ns = list(range(10, n_max + 1, 10))
    if args.theta is None:
        report = lagrange_sweep(kind, weight, ns, args.grid)
    else:
        report = lebesgue_sweep(kind, weight, args.theta, ns, args.grid)
    params = {
        "kind": kind.value,
        "gamma": f"{weight.gamma:g}",
        "delta": f"{weight.delta:g}",
        "theta": "lagrange" if args.theta is None else f"{args.theta:g}",
        "grid": args.grid,
        "sup": _fmt(report.sup_value),
    }
    _emit(render_csv("lebesgue", params, ["n", "m", "lc"], report.entries), args.out)
    return EXIT_OK


def cmd_interp(args) -> int:
    case = get_case(args.func or "f1")
    kind = _kind(args, case.kind)
    weight = _weight(args, case.weight)
    n = args.n or 50
    theta = args.theta if args.theta is not None else case.theta_default
    params = VPParams.from_theta(n, theta) if theta else VPParams(n, 0)
    nodes = make_nodes(kind, n)
    values = test_function_eval(case.id, nodes.x_nodes)
    vp = vp_interpolate(kind, params, values)
    lag = lagrange_interpolate(kind, n, values)
    if args.seed is not None:
        rng = np.random.default_rng(args.seed)
        t = np.sort(rng.uniform(0.0, np.pi, args.grid))
    else:
        t = make_grid(nodes, args.grid).t_points
    x = np.cos(t)
    f = test_function_eval(case.id, x)
    v_vals, l_vals = vp.at_angle(t), lag.at_angle(t)
    u = weight.at_angle(t)
    rows = zip(x, f, v_vals, l_vals, u * np.abs(f - v_vals), u * np.abs(f - l_vals))
    meta = {
        "func": case.id.value, "kind": kind.value, "n": n, "m": params.m,
        "gamma": f"{weight.gamma:g}", "delta": f"{weight.delta:g}", "grid": args.grid,
        "seed": "none" if args.seed is None else args.seed,
    }
    header = ["x", "f", "vp", "lagrange", "weighted_error_vp", "weighted_error_lagrange"]
    _emit(render_csv("interp", meta, header, rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", choices=["w1", "w2", "w3", "w4"])
    common.add_argument("--gamma", type=float)
    common.add_argument("--delta", type=float)
    common.add_argument("--theta", type=float)
    common.add_argument("--n", type=int)
    common.add_argument("--n-max", type=int)
    common.add_argument("--grid", type=int, default=4096, help="base number of equispaced angles")
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--check", action="store_true", help="compare against reference values")
    common.add_argument("--seed", type=int)
    common.add_argument("--func", choices=[f.value for f in TestFunction])

    parser = argparse.ArgumentParser(prog=PROGRAM, description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"{PROGRAM} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table-lc", parents=[common], help="sup Lebesgue constants per kind and theta").set_defaults(
        handler=cmd_table_lc
    )
    p = sub.add_parser("table-errors", parents=[common], help="weighted errors of VP vs Lagrange")
    p.add_argument("--panel", choices=["f1f2", "f3f4"], required=True)
    p.set_defaults(handler=cmd_table_errors)
    p = sub.add_parser("figure", parents=[common], help="figure data as CSV")
    p.add_argument("--id", choices=["fund", "lc", "pointwise", "gibbs"], required=True)
    p.set_defaults(handler=cmd_figure)
    sub.add_parser("check-bounds", parents=[common], help="boundedness verdicts for a weight").set_defaults(
        handler=cmd_check_bounds
    )
    sub.add_parser("lebesgue", parents=[common], help="Lebesgue constants for one n or a sweep").set_defaults(
        handler=cmd_lebesgue
    )
    sub.add_parser("interp", parents=[common], help="interpolate a test function").set_defaults(handler=cmd_interp)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.theta is not None and not 0.0 < args.theta < 1.0 and args.command != "interp":
        parser.error("--theta must lie in (0, 1)")
    try:
        return args.handler(args)
    except (UsageError, ValueError) as exc:
        print(f"{PROGRAM}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, FloatingPointError) as exc:
        print(f"{PROGRAM}: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"{PROGRAM}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
