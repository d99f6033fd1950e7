"""Weighted Lebesgue constants, boundedness conditions and weighted
sup-norm errors.

The sup over ``|x| <= 1`` is discretized on an :class:`EvaluationGrid` in
the angle variable: equispaced angles plus every node and every midpoint
between consecutive nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels
from .basis import ChebyshevKind, NodeSystem, check_angle, make_nodes, trig_factor
from .filtered import (
    EPS_SWITCH,
    VPParams,
    floor_theta,
    lagrange_prefactor,
    node_coefficients,
    q_matrix,
    vp_prefactor,
)
from .operators import JacobiWeight, VPInterpolant

__all__ = [
    "DEFAULT_BASE_COUNT",
    "NonFiniteValueError",
    "EvaluationGrid",
    "LebesgueReport",
    "make_grid",
    "lebesgue_function",
    "lebesgue_constant",
    "lagrange_lebesgue",
    "vp_bounds_check",
    "lagrange_bounds_check",
    "bound_violations",
    "weighted_sup_error",
    "lebesgue_sweep",
    "divergence_probe",
]

DEFAULT_BASE_COUNT = 4096
_DEDUP_TOL = 1e-14


class NonFiniteValueError(ArithmeticError):
    """A function or intermediate value is not finite."""


@dataclass(frozen=True)
class EvaluationGrid:
    base_count: int
    t_points: np.ndarray

    def __len__(self):
        return self.t_points.shape[0]

    @property
    def x_points(self) -> np.ndarray:
        return np.cos(self.t_points)


def make_grid(nodes: NodeSystem | None = None, base_count: int = DEFAULT_BASE_COUNT) -> EvaluationGrid:
    """Equispaced angles in [0, pi] joined with the node angles and their
    midpoints, sorted and deduplicated."""
    if base_count < 2:
        raise ValueError("base_count must be at least 2")
    parts = [np.linspace(0.0, np.pi, int(base_count))]
    if nodes is not None:
        tk = np.asarray(nodes.t_nodes)
        parts += [tk, 0.5 * (tk[1:] + tk[:-1])]
    t = np.sort(np.concatenate(parts))
    keep = np.concatenate([[True], np.diff(t) > _DEDUP_TOL])
    t = t[keep]
    t.setflags(write=False)
    return EvaluationGrid(int(base_count), t)


def _nearest_node(t: np.ndarray, tk: np.ndarray) -> np.ndarray:
    # index (0-based) of a node within EPS_SWITCH of each angle, else -1.
    # Nodes are at least ~pi/(n+1) apart, so at most one qualifies.
    if tk.shape[0] == 1:
        best = np.zeros(t.shape, np.int64)
    else:
        pos = np.clip(np.searchsorted(tk, t), 1, tk.shape[0] - 1)
        best = np.where(np.abs(t - tk[pos - 1]) <= np.abs(t - tk[pos]), pos - 1, pos)
    return np.where(np.abs(t - tk[best]) < EPS_SWITCH, best, -1).astype(np.int64)


def lebesgue_function(kind: ChebyshevKind, params: VPParams, weight: JacobiWeight, t) -> np.ndarray:
    """``u(x) sum_k |Phi_{n,k}^m(x)| / u(x_k)`` at angles ``t``.

    ``m = 0`` gives the Lagrange Lebesgue function. Pairs away from the
    nodes use the compact formulas; the pair closest to a node is summed
    exactly through the q-basis.
    """
    kind = ChebyshevKind.parse(kind)
    n, m = params.n, params.m
    t = check_angle(np.atleast_1d(t)).ravel()
    nodes = make_nodes(kind, n)
    tk = nodes.t_nodes
    u_nodes = weight.at_angle(tk)
    sh_t, ch_t = np.sin(t / 2), np.cos(t / 2)
    sh_k, ch_k = np.sin(tk / 2), np.cos(tk / 2)
    skip = _nearest_node(t, tk)
    if m == 0:
        coef = np.abs(lagrange_prefactor(kind, n, tk)) / u_nodes
        inner = _kernels.lagrange_abs_sum(sh_t, ch_t, sh_k, ch_k, coef, skip)
    else:
        coef = np.abs(vp_prefactor(kind, n, m, tk)) / u_nodes
        inner = _kernels.vp_abs_sum(
            sh_t, ch_t, np.sin(m * t), np.cos(m * t), sh_k, ch_k, np.sin(m * tk), np.cos(m * tk), coef, skip
        )
    total = np.abs(trig_factor(kind, n, t)) * inner
    rows = np.nonzero(skip >= 0)[0]
    if rows.size:
        cols = skip[rows]
        near_vals = np.einsum("ij,ij->i", q_matrix(kind, params, t[rows]), node_coefficients(kind, n)[cols])
        total[rows] += np.abs(near_vals) / u_nodes[cols]
    return weight.at_angle(t) * total


def _resolve_grid(kind, n, grid, base_count):
    if grid is None:
        return make_grid(make_nodes(kind, n), base_count)
    if len(grid) == 0:
        raise ValueError("evaluation grid is empty")
    return grid


def lebesgue_constant(
    kind: ChebyshevKind,
    params: VPParams,
    weight: JacobiWeight,
    grid: EvaluationGrid | None = None,
    base_count: int = DEFAULT_BASE_COUNT,
) -> float:
    """Weighted Lebesgue constant of ``V_n^m``, maximized over the grid.

    Without a grid, the default node-enriched grid of ``base_count`` angles
    is used.
    """
    grid = _resolve_grid(kind, params.n, grid, base_count)
    values = lebesgue_function(kind, params, weight, grid.t_points)
    if not np.all(np.isfinite(values)):
        raise NonFiniteValueError("non-finite Lebesgue function value")
    return float(values.max())


def lagrange_lebesgue(
    kind: ChebyshevKind,
    n: int,
    weight: JacobiWeight,
    grid: EvaluationGrid | None = None,
    base_count: int = DEFAULT_BASE_COUNT,
) -> float:
    return lebesgue_constant(kind, VPParams(n, 0), weight, grid, base_count)


# Boundedness conditions, one (label, predicate) pair per inequality.
_VP_CONDITIONS = {
    ChebyshevKind.W1: [
        ("0<=gamma<=1", lambda g, d: g <= 1),
        ("0<=delta<=1", lambda g, d: d <= 1),
    ],
    ChebyshevKind.W2: [
        ("0<gamma<=3/2", lambda g, d: 0 < g <= 1.5),
        ("0<delta<=3/2", lambda g, d: 0 < d <= 1.5),
        ("-1<=gamma-delta<=1", lambda g, d: -1 <= g - d <= 1),
    ],
    ChebyshevKind.W3: [
        ("0<=gamma<=1", lambda g, d: g <= 1),
        ("0<delta<=3/2", lambda g, d: 0 < d <= 1.5),
        ("gamma-delta<=1/2", lambda g, d: g - d <= 0.5),
    ],
    ChebyshevKind.W4: [
        ("0<gamma<=3/2", lambda g, d: 0 < g <= 1.5),
        ("0<=delta<=1", lambda g, d: d <= 1),
        ("gamma-delta>=-1/2", lambda g, d: g - d >= -0.5),
    ],
}

_LAGRANGE_CONDITIONS = {
    ChebyshevKind.W1: [
        ("0<=gamma<=1", lambda g, d: g <= 1),
        ("0<=delta<=1", lambda g, d: d <= 1),
    ],
    ChebyshevKind.W2: [
        ("1/2<=gamma<=3/2", lambda g, d: 0.5 <= g <= 1.5),
        ("1/2<=delta<=3/2", lambda g, d: 0.5 <= d <= 1.5),
    ],
    ChebyshevKind.W3: [
        ("0<=gamma<=1", lambda g, d: g <= 1),
        ("1/2<=delta<=3/2", lambda g, d: 0.5 <= d <= 1.5),
    ],
    ChebyshevKind.W4: [
        ("1/2<=gamma<=3/2", lambda g, d: 0.5 <= g <= 1.5),
        ("0<=delta<=1", lambda g, d: d <= 1),
    ],
}


def bound_violations(kind: ChebyshevKind, weight: JacobiWeight, operator: str = "vp") -> list[str]:
    """Labels of the inequalities that ``weight`` violates.

    ``operator`` is ``"vp"`` or ``"lagrange"``. An empty list means the
    Lebesgue constants stay bounded (VP) or grow like ``log n`` (Lagrange).
    """
    kind = ChebyshevKind.parse(kind)
    table = {"vp": _VP_CONDITIONS, "lagrange": _LAGRANGE_CONDITIONS}[operator]
    g, d = float(weight.gamma), float(weight.delta)
    if g < 0 or d < 0:
        raise ValueError("Jacobi exponents must be non-negative")
    return [label for label, ok in table[kind] if not ok(g, d)]


def vp_bounds_check(kind: ChebyshevKind, weight: JacobiWeight) -> bool:
    return not bound_violations(kind, weight, "vp")


def lagrange_bounds_check(kind: ChebyshevKind, weight: JacobiWeight) -> bool:
    return not bound_violations(kind, weight, "lagrange")


def _eval_function(f: Callable, x: np.ndarray) -> np.ndarray:
    try:
        values = np.asarray(f(x), dtype=float)
        if values.shape != x.shape:
            raise ValueError
    except (TypeError, ValueError):
        values = np.array([float(f(xi)) for xi in x])
    bad = ~np.isfinite(values)
    if np.any(bad):
        raise NonFiniteValueError(f"function value is not finite at x = {float(x[bad][0])!r}")
    return values


def weighted_sup_error(
    interp: VPInterpolant,
    f: Callable,
    weight: JacobiWeight,
    grid: EvaluationGrid | None = None,
    base_count: int = DEFAULT_BASE_COUNT,
) -> float:
    """``max u(x) |f(x) - interp(x)|`` over the grid.

    The endpoints ``x = 1`` (``gamma > 0``) and ``x = -1`` (``delta > 0``)
    are left out, since ``f u`` is only required to vanish there in the limit.
    """
    grid = _resolve_grid(interp.kind, interp.params.n, grid, base_count)
    t = grid.t_points
    keep = np.ones(t.shape, bool)
    if weight.vanishes_at_plus_one:
        keep &= t > 0.0
    if weight.vanishes_at_minus_one:
        keep &= t < np.pi
    t = t[keep]
    x = np.cos(t)
    err = weight.at_angle(t) * np.abs(_eval_function(f, x) - interp.at_angle(t))
    if not np.all(np.isfinite(err)):
        raise NonFiniteValueError(f"interpolation error is not finite at x = {float(x[~np.isfinite(err)][0])!r}")
    return float(err.max())


@dataclass
class LebesgueReport:
    """Lebesgue constants along a sequence of ``(n, m)``.

    ``theta`` is ``None`` for Lagrange sweeps.
    """

    kind: ChebyshevKind
    weight: JacobiWeight
    theta: float | None
    entries: list[tuple[int, int, float]] = field(default_factory=list)

    @property
    def sup_value(self) -> float:
        return max(lc for _, _, lc in self.entries)

    @property
    def n_values(self) -> np.ndarray:
        return np.array([n for n, _, _ in self.entries])

    @property
    def values(self) -> np.ndarray:
        return np.array([lc for _, _, lc in self.entries])

    def add(self, n: int, m: int, lc: float):
        if not lc > 0:
            raise NonFiniteValueError(f"Lebesgue constant {lc!r} at n={n}, m={m} is not positive")
        self.entries.append((n, m, lc))


def lebesgue_sweep(
    kind: ChebyshevKind,
    weight: JacobiWeight,
    theta: float,
    n_values: Iterable[int],
    base_count: int = DEFAULT_BASE_COUNT,
) -> LebesgueReport:
    """Lebesgue constants for ``m = floor(theta n)`` over ``n_values``."""
    kind = ChebyshevKind.parse(kind)
    n_values = list(n_values)
    if not n_values:
        raise ValueError("n_values must not be empty")
    if not 0.0 < theta < 1.0:
        raise ValueError(f"theta must lie in (0, 1), got {theta!r}")
    report = LebesgueReport(kind, weight, theta)
    for n in n_values:
        m = floor_theta(theta, n)
        if n < 2 or m < 1:
            raise ValueError(f"need n >= 2 and floor(theta n) >= 1, got n={n}, theta={theta}")
        report.add(n, m, lebesgue_constant(kind, VPParams(n, m), weight, base_count=base_count))
    return report


def lagrange_sweep(
    kind: ChebyshevKind,
    weight: JacobiWeight,
    n_values: Iterable[int],
    base_count: int = DEFAULT_BASE_COUNT,
) -> LebesgueReport:
    kind = ChebyshevKind.parse(kind)
    report = LebesgueReport(kind, weight, None)
    for n in n_values:
        report.add(n, 0, lagrange_lebesgue(kind, n, weight, base_count=base_count))
    if not report.entries:
        raise ValueError("n_values must not be empty")
    return report


def divergence_probe(
    kind: ChebyshevKind,
    weight: JacobiWeight,
    mu: int = 1,
    nu: int = 2,
    l_values: Sequence[int] = (4, 8, 16, 32, 64, 128, 256),
    base_count: int = DEFAULT_BASE_COUNT,
) -> LebesgueReport:
    """Lebesgue constants along ``n = 2 l nu``, ``m = 2 l mu``.

    ``0 < mu < nu`` must be coprime. When the weight violates the
    boundedness conditions the values grow without bound along this
    sequence.
    """
    kind = ChebyshevKind.parse(kind)
    if not 0 < mu < nu:
        raise ValueError(f"need 0 < mu < nu, got mu={mu}, nu={nu}")
    if math.gcd(mu, nu) != 1:
        raise ValueError(f"mu={mu} and nu={nu} must be coprime")
    l_values = list(l_values)
    if not l_values or any(b <= a for a, b in zip(l_values, l_values[1:])) or l_values[0] < 1:
        raise ValueError("l_values must be positive and strictly increasing")
    report = LebesgueReport(kind, weight, mu / nu)
    for l in l_values:
        n, m = 2 * l * nu, 2 * l * mu
        report.add(n, m, lebesgue_constant(kind, VPParams(n, m), weight, base_count=base_count))
    return report
