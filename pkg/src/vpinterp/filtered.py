"""De la Vallee Poussin filter, the modified q-basis and the fundamental
VP / Lagrange polynomials.

Three equivalent routes to the fundamental VP polynomial are provided:

* :func:`fundamental_vp_sum`   -- node coefficients times the q-basis;
* :func:`fundamental_vp_mean`  -- delayed mean of Darboux kernels;
* :func:`fundamental_vp_trig`  -- compact trigonometric formula, O(1) per
  (point, node) pair.

Node indices ``k`` are 1-based throughout, as in the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import (
    ChebyshevKind,
    check_angle,
    make_nodes,
    normalization,
    ortho_matrix,
    ortho_poly_eval,
    trig_factor,
)

__all__ = [
    "EPS_SWITCH",
    "VPParams",
    "FilterCoefficients",
    "filter_coefficients",
    "q_poly_eval",
    "q_matrix",
    "node_coefficients",
    "fundamental_vp_sum",
    "fundamental_vp_mean",
    "fundamental_vp_trig",
    "fundamental_lagrange",
    "fundamental_lagrange_trig",
    "fundamental_matrix",
    "vp_prefactor",
    "lagrange_prefactor",
]

# |t - t_k| (radians) below which the compact formulas hand over to the sum form
EPS_SWITCH = 1e-6


def floor_theta(theta: float, n: int) -> int:
    """``floor(theta * n)`` immune to binary rounding of ``theta``."""
    return int(math.floor(round(theta * n, 9)))


@dataclass(frozen=True)
class VPParams:
    """Node count ``n`` and filter half-width ``m`` with ``0 <= m < n``."""

    n: int
    m: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if int(self.m) != self.m or self.m < 0:
            raise ValueError(f"m must be a non-negative integer, got {self.m!r}")
        if self.m >= self.n:
            raise ValueError(f"filter half-width m={self.m} must be smaller than n={self.n}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))

    @classmethod
    def from_theta(cls, n: int, theta: float) -> "VPParams":
        """``m = floor(theta * n)``."""
        if not 0.0 < theta < 1.0:
            raise ValueError(f"theta must lie in (0, 1), got {theta!r}")
        return cls(n, floor_theta(theta, n))

    @property
    def theta(self) -> float:
        return self.m / self.n

    @property
    def degree(self) -> int:
        """Degree of the fundamental VP polynomials."""
        return self.n + self.m - 1


@dataclass(frozen=True)
class FilterCoefficients:
    params: VPParams
    mu: np.ndarray


def filter_coefficients(params: VPParams) -> FilterCoefficients:
    """Trapezoidal filter values ``mu_j`` for ``j = 0..n+m-1``.

    Equal to one up to ``j = n - m`` and then decreasing linearly with slope
    ``-1/(2m)``. For ``m = 0`` this is ``n`` ones.
    """
    n, m = params.n, params.m
    if m == 0:
        mu = np.ones(n)
    else:
        j = np.arange(n + m)
        mu = np.where(j <= n - m, 1.0, (n + m - j) / (2.0 * m))
    mu.setflags(write=False)
    return FilterCoefficients(params, mu)


def _check_index(k, n):
    k_arr = np.asarray(k)
    if not np.issubdtype(k_arr.dtype, np.integer) or np.any(k_arr < 1) or np.any(k_arr > n):
        raise ValueError(f"node index must be an integer in [1, {n}], got {k!r}")
    return k_arr


def _scalarize(out):
    return float(out) if np.ndim(out) == 0 else out


def q_poly_eval(kind: ChebyshevKind, params: VPParams, j: int, t):
    """Modified basis polynomial ``q_{n,j}^m(w, cos t)``, ``0 <= j < n``."""
    n, m = params.n, params.m
    if int(j) != j or not 0 <= j < n:
        raise ValueError(f"q-basis index must be in [0, {n - 1}], got {j!r}")
    j = int(j)
    if j <= n - m:
        return ortho_poly_eval(kind, j, t)
    low = ortho_poly_eval(kind, j, t)
    high = ortho_poly_eval(kind, 2 * n - j, t)
    return _scalarize((m + n - j) / (2 * m) * np.asarray(low) - (m - n + j) / (2 * m) * np.asarray(high))


def q_matrix(kind: ChebyshevKind, params: VPParams, t) -> np.ndarray:
    """``Q[i, j] = q_{n,j}^m(t_i)`` for ``j = 0..n-1``."""
    n, m = params.n, params.m
    P = ortho_matrix(kind, n + m, t)
    Q = P[:, :n].copy()
    if m > 0:
        j = np.arange(n - m + 1, n)
        Q[:, j] = (m + n - j) / (2 * m) * P[:, j] - (m - n + j) / (2 * m) * P[:, 2 * n - j]
    return Q


def node_coefficients(kind: ChebyshevKind, n: int) -> np.ndarray:
    """``C[k-1, j] = lambda_{n,k} p_j(t_k)`` for ``j = 0..n-1``."""
    nodes = make_nodes(kind, n)
    return nodes.christoffel[:, None] * ortho_matrix(kind, n, nodes.t_nodes)


def fundamental_vp_sum(kind: ChebyshevKind, params: VPParams, k: int, t):
    """``Phi_{n,k}^m(cos t) = lambda_k sum_{j<n} p_j(t_k) q_j(t)``.

    With ``m = 0`` this is the fundamental Lagrange polynomial.
    """
    k = int(_check_index(k, params.n))
    t_arr = check_angle(t)
    C = node_coefficients(kind, params.n)[k - 1]
    out = q_matrix(kind, params, t_arr.ravel()) @ C
    return _scalarize(out.reshape(t_arr.shape))


def fundamental_vp_mean(kind: ChebyshevKind, params: VPParams, k: int, t):
    """Delayed mean ``lambda_k/(2m) sum_{r=n-m}^{n+m-1} K_r(t, t_k)``.

    Brute-force route, independent of the q-basis; needs ``m >= 1``.
    """
    n, m = params.n, params.m
    if m == 0:
        raise ValueError("the Darboux-mean form needs m >= 1")
    k = int(_check_index(k, n))
    nodes = make_nodes(kind, n)
    t_arr = check_angle(t)
    tk = nodes.t_nodes[k - 1]
    terms = ortho_matrix(kind, n + m, t_arr.ravel()) * ortho_matrix(kind, n + m, [tk])
    kernels = np.cumsum(terms, axis=1)  # kernels[:, r] = K_r
    out = nodes.christoffel[k - 1] / (2 * m) * kernels[:, n - m : n + m].sum(axis=1)
    return _scalarize(out.reshape(t_arr.shape))


def vp_prefactor(kind: ChebyshevKind, n: int, m: int, t_nodes: np.ndarray) -> np.ndarray:
    """Node-dependent constant multiplying ``trig_factor(n, t) * Psi`` in the
    compact VP formula."""
    kind = ChebyshevKind.parse(kind)
    sign = np.where(np.arange(1, len(t_nodes) + 1) % 2 == 0, 1.0, -1.0)
    if kind is ChebyshevKind.W1:
        return sign / (4.0 * m * n)
    if kind is ChebyshevKind.W2:
        return sign * np.sin(t_nodes) / (4.0 * m * (n + 1))
    if kind is ChebyshevKind.W3:
        return sign * np.cos(t_nodes / 2) / (2.0 * m * (2 * n + 1))
    return sign * np.sin(t_nodes / 2) / (2.0 * m * (2 * n + 1))


def lagrange_prefactor(kind: ChebyshevKind, n: int, t_nodes: np.ndarray) -> np.ndarray:
    """Reciprocal of ``d/dx trig_factor(n)`` at each node.

    The fundamental Lagrange polynomial is then
    ``trig_factor(n, t) * c_k / (cos t - cos t_k)``.
    """
    kind = ChebyshevKind.parse(kind)
    sign = np.where(np.arange(1, len(t_nodes) + 1) % 2 == 0, 1.0, -1.0)  # (-1)^k
    s = np.sin(t_nodes)
    if kind is ChebyshevKind.W1:
        return -sign * s / n
    if kind is ChebyshevKind.W2:
        return -sign * s**2 / (n + 1)
    if kind is ChebyshevKind.W3:
        return -sign * 2.0 * np.cos(t_nodes / 2) * s / (2 * n + 1)
    return -sign * 2.0 * np.sin(t_nodes / 2) * s / (2 * n + 1)


def _psi(m, t, tk):
    d_minus = np.sin((t - tk) / 2)
    d_plus = np.sin((t + tk) / 2)
    return np.sin(m * (t - tk)) / d_minus**2 - np.sin(m * (t + tk)) / d_plus**2


def _near(t, tk):
    return (np.abs(t - tk) < EPS_SWITCH) | (np.abs(np.sin((t + tk) / 2)) < EPS_SWITCH)


def fundamental_vp_trig(kind: ChebyshevKind, params: VPParams, k: int, t):
    """Compact trigonometric form of ``Phi_{n,k}^m``, requires ``0 < m < n``.

    Uses ``Psi(t, t_k) = sin(m(t-t_k))/sin^2((t-t_k)/2)
    - sin(m(t+t_k))/sin^2((t+t_k)/2)``. Points within ``EPS_SWITCH`` of the
    node are evaluated with :func:`fundamental_vp_sum` instead.
    """
    n, m = params.n, params.m
    if m == 0:
        raise ValueError("the compact VP formula needs 0 < m < n")
    k = int(_check_index(k, n))
    nodes = make_nodes(kind, n)
    t_arr = check_angle(t)
    tk = nodes.t_nodes[k - 1]
    near = _near(t_arr, tk)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = vp_prefactor(kind, n, m, nodes.t_nodes)[k - 1] * trig_factor(kind, n, t_arr) * _psi(m, t_arr, tk)
    if np.any(near):
        out = np.where(near, 0.0, out)
        out[near] = fundamental_vp_sum(kind, params, k, t_arr[near])
    return _scalarize(out)


def fundamental_lagrange(kind: ChebyshevKind, n: int, k: int, t):
    """``l_{n,k}(cos t) = lambda_k sum_{j<n} p_j(t_k) p_j(t)``."""
    return fundamental_vp_sum(kind, VPParams(n, 0), k, t)


def fundamental_lagrange_trig(kind: ChebyshevKind, n: int, k: int, t):
    """Compact (Christoffel-Darboux) form of ``l_{n,k}``.

    ``cos t - cos t_k`` is formed as ``-2 sin((t+t_k)/2) sin((t-t_k)/2)`` to
    avoid cancellation. Near the node it falls back to the sum form.
    """
    k = int(_check_index(k, n))
    nodes = make_nodes(kind, n)
    t_arr = check_angle(t)
    tk = nodes.t_nodes[k - 1]
    near = _near(t_arr, tk)
    diff = -2.0 * np.sin((t_arr + tk) / 2) * np.sin((t_arr - tk) / 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = lagrange_prefactor(kind, n, nodes.t_nodes)[k - 1] * trig_factor(kind, n, t_arr) / diff
    if np.any(near):
        out = np.where(near, 0.0, out)
        out[near] = fundamental_lagrange(kind, n, k, t_arr[near])
    return _scalarize(out)


def fundamental_matrix(kind: ChebyshevKind, params: VPParams, t, method: str = "trig") -> np.ndarray:
    """All fundamental polynomials at once: ``F[i, k-1] = Phi_{n,k}^m(t_i)``.

    ``method`` is ``"trig"`` (compact formulas, Lagrange compact form when
    ``m = 0``) or ``"sum"`` (q-basis sums).
    """
    t = check_angle(np.atleast_1d(t)).ravel()
    n, m = params.n, params.m
    if method == "sum":
        return q_matrix(kind, params, t) @ node_coefficients(kind, n).T
    if method != "trig":
        raise ValueError(f"unknown method {method!r}")
    nodes = make_nodes(kind, n)
    tk = nodes.t_nodes[None, :]
    T = t[:, None]
    near = _near(T, tk)
    with np.errstate(divide="ignore", invalid="ignore"):
        if m == 0:
            diff = -2.0 * np.sin((T + tk) / 2) * np.sin((T - tk) / 2)
            F = lagrange_prefactor(kind, n, nodes.t_nodes)[None, :] * trig_factor(kind, n, T) / diff
        else:
            F = vp_prefactor(kind, n, m, nodes.t_nodes)[None, :] * trig_factor(kind, n, T) * _psi(m, T, tk)
    if np.any(near):
        rows, cols = np.nonzero(near)
        Q = q_matrix(kind, params, t[rows])
        C = node_coefficients(kind, n)[cols]
        F[rows, cols] = np.einsum("ij,ij->i", Q, C)
    return F
