"""Benchmark tables and figure data, with the reference values they are
checked against."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analysis import (
    DEFAULT_BASE_COUNT,
    bound_violations,
    lagrange_lebesgue,
    lebesgue_sweep,
    make_grid,
    weighted_sup_error,
)
from .basis import ChebyshevKind, make_nodes
from .filtered import VPParams, fundamental_matrix
from .operators import JacobiWeight, lagrange_interpolate, vp_interpolate
from .testfns import TestFunction, get_case, sample_at_nodes, test_function_eval

THETAS = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)

# (kind, weight) rows of the sup-Lebesgue-constant table
LC_TABLE_ROWS = (
    (ChebyshevKind.W1, JacobiWeight(0.0, 0.0)),
    (ChebyshevKind.W2, JacobiWeight(0.5, 0.4)),
    (ChebyshevKind.W3, JacobiWeight(0.2, 0.3)),
    (ChebyshevKind.W4, JacobiWeight(0.5, 0.4)),
)

REFERENCE_LC_TABLE = np.array(
    [
        [2.43, 1.99, 1.73, 1.53, 1.42, 1.26, 1.16, 1.10, 1.04],
        [2.42, 1.98, 1.72, 1.52, 1.41, 1.26, 1.16, 1.10, 1.04],
        [2.47, 2.03, 1.76, 1.55, 1.44, 1.28, 1.18, 1.11, 1.06],
        [2.44, 2.00, 1.74, 1.54, 1.43, 1.28, 1.17, 1.10, 1.05],
    ]
)
LC_TOLERANCE = 0.05
LC_N_MAX = 1000
LC_N_STEP = 10

# function -> rows of (n, VP error, Lagrange error)
REFERENCE_ERRORS = {
    TestFunction.F1: ((50, 3.7e-7, 4.1e-7), (150, 9.9e-9, 9.9e-9), (250, 3.6e-9, 2.2e-9),
                      (350, 4.7e-10, 4.7e-10), (450, 2.0e-10, 2.1e-10)),
    TestFunction.F2: ((400, 2.9e-2, 1.9e-1), (1200, 9.5e-2, 1.9e-1), (1600, 3.8e-3, 1.3e-1),
                      (2800, 2.0e-3, 8.9e-2), (3800, 3.9e-3, 2.7e-2)),
    TestFunction.F3: ((51, 3.4e-3, 3.3e-3), (101, 1.8e-3, 1.7e-3), (201, 9.0e-4, 8.8e-4),
                      (301, 6.0e-4, 5.9e-4), (401, 4.5e-4, 4.4e-4), (501, 3.6e-4, 3.5e-4),
                      (601, 2.3e-4, 2.2e-4)),
    TestFunction.F4: ((100, 1.7e-2, 4.1e-2), (600, 2.6e-3, 2.5e-1), (1100, 1.2e-3, 4.7e-1),
                      (1600, 6.7e-4, 6.7e-1), (2100, 3.8e-4, 8.7e-1), (2600, 2.1e-4, 1.1e0),
                      (3100, 1.0e-4, 1.3e0)),
}
PANELS = {"f1f2": (TestFunction.F1, TestFunction.F2), "f3f4": (TestFunction.F3, TestFunction.F4)}
ERROR_FACTOR = 2.0

# in-range / out-of-range exponent pairs for the Lebesgue-constant plots
LC_FIGURE_PAIRS = {
    ChebyshevKind.W1: (JacobiWeight(0.5, 0.5), JacobiWeight(0.3, 1.5)),
    ChebyshevKind.W2: (JacobiWeight(0.7, 1.3), JacobiWeight(0.0, 1.5)),
    ChebyshevKind.W3: (JacobiWeight(0.4, 1.5), JacobiWeight(0.4, 0.0)),
    ChebyshevKind.W4: (JacobiWeight(0.5, 1.0), JacobiWeight(0.0, 0.5)),
}

GIBBS_THETAS = (0.4, 0.6, 0.8)


@dataclass(frozen=True)
class CellCheck:
    label: str
    value: float
    reference: float
    passed: bool
    rule: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.label}: computed {self.value:.4g}, reference {self.reference:.4g} ({self.rule})"


def lc_n_values(n_max: int = LC_N_MAX, step: int = LC_N_STEP) -> list[int]:
    if n_max < step:
        raise ValueError(f"n_max must be at least {step}")
    return list(range(step, n_max + 1, step))


def lc_table(n_max: int = LC_N_MAX, base_count: int = DEFAULT_BASE_COUNT, progress=None) -> np.ndarray:
    """Sup over ``n = 10, 20, ..., n_max`` of the weighted Lebesgue constant,
    one row per (kind, weight) pair and one column per theta."""
    ns = lc_n_values(n_max)
    table = np.empty((len(LC_TABLE_ROWS), len(THETAS)))
    for i, (kind, weight) in enumerate(LC_TABLE_ROWS):
        for j, theta in enumerate(THETAS):
            table[i, j] = lebesgue_sweep(kind, weight, theta, ns, base_count).sup_value
            if progress is not None:
                progress(i, j, table[i, j])
    return table


def check_lc_table(table: np.ndarray) -> list[CellCheck]:
    checks = []
    for i, (kind, weight) in enumerate(LC_TABLE_ROWS):
        for j, theta in enumerate(THETAS):
            value, ref = float(table[i, j]), float(REFERENCE_LC_TABLE[i, j])
            checks.append(
                CellCheck(f"{kind.value} u={weight} theta={theta}", value, ref,
                          abs(value - ref) <= LC_TOLERANCE, f"|diff| <= {LC_TOLERANCE}")
            )
    return checks


def interpolation_errors(fid, n: int, theta: float | None = None, base_count: int = DEFAULT_BASE_COUNT):
    """Weighted sup errors ``(m, VP error, Lagrange error)`` for a test case."""
    case = get_case(fid)
    theta = case.theta_default if theta is None else theta
    params = VPParams.from_theta(n, theta)
    values = sample_at_nodes(case.id, case.kind, n)
    grid = make_grid(make_nodes(case.kind, n), base_count)

    def f(x):
        return test_function_eval(case.id, x)

    vp = weighted_sup_error(vp_interpolate(case.kind, params, values), f, case.weight, grid)
    lag = weighted_sup_error(lagrange_interpolate(case.kind, n, values), f, case.weight, grid)
    return params.m, vp, lag


def error_panel(panel: str, base_count: int = DEFAULT_BASE_COUNT) -> list[tuple]:
    """Rows ``(function, n, m, VP error, Lagrange error)`` at the reference n."""
    if panel not in PANELS:
        raise ValueError(f"unknown panel {panel!r}; expected one of {sorted(PANELS)}")
    rows = []
    for fid in PANELS[panel]:
        for n, _, _ in REFERENCE_ERRORS[fid]:
            m, vp, lag = interpolation_errors(fid, n, base_count=base_count)
            rows.append((fid.value, n, m, vp, lag))
    return rows


def check_error_panel(rows) -> list[CellCheck]:
    """VP errors within a factor 2 of the reference; for ``f4`` the Lagrange
    error must also reach at least half of its reference value."""
    refs = {(fid.value, n): (vp, lag) for fid, table in REFERENCE_ERRORS.items() for n, vp, lag in table}
    checks = []
    for fid, n, _, vp, lag in rows:
        ref_vp, ref_lag = refs[(fid, n)]
        ratio_ok = ref_vp / ERROR_FACTOR <= vp <= ref_vp * ERROR_FACTOR
        checks.append(CellCheck(f"{fid} n={n} VP", vp, ref_vp, ratio_ok, f"within factor {ERROR_FACTOR:g}"))
        if fid == TestFunction.F4.value:
            checks.append(
                CellCheck(f"{fid} n={n} Lagrange", lag, ref_lag, lag >= ref_lag / ERROR_FACTOR,
                          f">= reference/{ERROR_FACTOR:g}")
            )
    return checks


def fundamental_figure(n: int = 30, k: int = 15, kind=ChebyshevKind.W1, base_count: int = 1001):
    """Angles and ``Phi_{n,k}^m`` for ``m`` in ``0, n/4, n/2, 3n/4``."""
    ms = sorted({0, n // 4, n // 2, (3 * n) // 4} - {n})
    grid = make_grid(make_nodes(kind, n), base_count)
    columns = [fundamental_matrix(kind, VPParams(n, m), grid.t_points)[:, k - 1] for m in ms]
    return ms, grid.t_points, np.column_stack(columns)


def lc_figure(kinds=None, n_values=(16, 32, 64, 128, 256, 512, 1024), theta: float = 0.5,
              base_count: int = DEFAULT_BASE_COUNT) -> list[tuple]:
    """Rows ``(kind, gamma, delta, bounded, n, m, lc)`` for the in-range and
    out-of-range weight of each kind."""
    kinds = list(LC_FIGURE_PAIRS) if kinds is None else [ChebyshevKind.parse(k) for k in kinds]
    rows = []
    for kind in kinds:
        for weight in LC_FIGURE_PAIRS[kind]:
            bounded = not bound_violations(kind, weight)
            report = lebesgue_sweep(kind, weight, theta, n_values, base_count)
            rows += [(kind.value, weight.gamma, weight.delta, int(bounded), n, m, lc) for n, m, lc in report.entries]
    return rows


def pointwise_figure(fid=TestFunction.F3, n: int | None = None, theta: float | None = None,
                     base_count: int = 2001):
    """``x``, ``u|f - L_n f|`` and ``u|f - V_n^m f|`` on a node-enriched grid."""
    case = get_case(fid)
    n = n or (51 if case.id is TestFunction.F3 else 50)
    theta = theta if theta is not None else (case.theta_default or 0.5)
    values = sample_at_nodes(case.id, case.kind, n)
    grid = make_grid(make_nodes(case.kind, n), base_count)
    t = grid.t_points
    x = np.cos(t)
    f = test_function_eval(case.id, x)
    u = case.weight.at_angle(t)
    lag = lagrange_interpolate(case.kind, n, values).at_angle(t)
    vp = vp_interpolate(case.kind, VPParams.from_theta(n, theta), values).at_angle(t)
    return x, u * np.abs(f - lag), u * np.abs(f - vp)


def gibbs_figure(n: int = 50, thetas=GIBBS_THETAS, base_count: int = 2001):
    """``x``, ``u f5``, ``u L_n f5`` and ``u V_n^m f5`` for each theta."""
    case = get_case(TestFunction.F5)
    values = sample_at_nodes(case.id, case.kind, n)
    grid = make_grid(make_nodes(case.kind, n), base_count)
    t = grid.t_points
    x = np.cos(t)
    u = case.weight.at_angle(t)
    columns = [u * test_function_eval(case.id, x), u * lagrange_interpolate(case.kind, n, values).at_angle(t)]
    for theta in thetas:
        columns.append(u * vp_interpolate(case.kind, VPParams.from_theta(n, theta), values).at_angle(t))
    return x, np.column_stack(columns)


def gibbs_max_errors(n: int = 50, thetas=(0.2, 0.4, 0.6, 0.8), x_min: float = 0.05, points: int = 20001):
    """Max of ``u|f5 - V f5|`` over ``[x_min, 1]`` per theta, plus the Lagrange
    value under key ``None``."""
    case = get_case(TestFunction.F5)
    values = sample_at_nodes(case.id, case.kind, n)
    x = np.linspace(x_min, 1.0, points)
    t = np.arccos(x)
    f = test_function_eval(case.id, x)
    u = case.weight(x)
    out = {None: float(np.max(u * np.abs(f - lagrange_interpolate(case.kind, n, values).at_angle(t))))}
    for theta in thetas:
        interp = vp_interpolate(case.kind, VPParams.from_theta(n, theta), values)
        out[theta] = float(np.max(u * np.abs(f - interp.at_angle(t))))
    return out


def lagrange_growth(kind, weight, n_values, base_count: int = DEFAULT_BASE_COUNT) -> np.ndarray:
    return np.array([lagrange_lebesgue(kind, n, weight, base_count=base_count) for n in n_values])
