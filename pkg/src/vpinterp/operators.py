"""VP and Lagrange interpolation operators built from node values."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .basis import ChebyshevKind, check_angle, make_nodes, normalization, trig_factor
from .filtered import VPParams, filter_coefficients, node_coefficients

__all__ = [
    "JacobiWeight",
    "VPInterpolant",
    "vp_interpolate",
    "lagrange_interpolate",
    "evaluate",
    "x_to_angle",
]

# bound on the size of the (points x degrees) block built during evaluation
_BLOCK_ENTRIES = 2**21


def x_to_angle(x) -> np.ndarray:
    """``arccos`` of ``x``; rounding noise just outside [-1, 1] is clipped."""
    x = np.asarray(x, dtype=float)
    if np.any(~(np.abs(x) <= 1.0 + 1e-12)):
        raise ValueError("abscissae must lie in [-1, 1]")
    return np.arccos(np.clip(x, -1.0, 1.0))


@dataclass(frozen=True)
class JacobiWeight:
    """``u(x) = (1 - x)^gamma (1 + x)^delta`` with ``gamma, delta >= 0``."""

    gamma: float = 0.0
    delta: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.gamma) and np.isfinite(self.delta)):
            raise ValueError("Jacobi exponents must be finite")
        if self.gamma < 0 or self.delta < 0:
            raise ValueError(f"Jacobi exponents must be non-negative, got gamma={self.gamma}, delta={self.delta}")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return (1.0 - x) ** self.gamma * (1.0 + x) ** self.delta

    def at_angle(self, t):
        """``u(cos t) = 2^(gamma+delta) sin^(2 gamma)(t/2) cos^(2 delta)(t/2)``."""
        t = np.asarray(t, dtype=float)
        return (
            2.0 ** (self.gamma + self.delta)
            * np.sin(t / 2) ** (2 * self.gamma)
            * np.abs(np.cos(t / 2)) ** (2 * self.delta)
        )

    @property
    def vanishes_at_plus_one(self) -> bool:
        return self.gamma > 0

    @property
    def vanishes_at_minus_one(self) -> bool:
        return self.delta > 0

    def __str__(self):
        return f"v^({self.gamma:g},{self.delta:g})"


@dataclass(frozen=True)
class VPInterpolant:
    """``V_n^m f`` given the values of ``f`` at the zeros of ``p_n(w)``.

    ``coefficients`` holds ``c_j = sum_k f(x_k) lambda_k p_j(t_k)``, the
    expansion in the q-basis. Evaluation unfolds them once into plain
    orthonormal coefficients of degree ``< n + m``.
    """

    kind: ChebyshevKind
    params: VPParams
    node_values: np.ndarray
    coefficients: np.ndarray = field(repr=False)
    _ortho_coefficients: np.ndarray = field(repr=False)

    @property
    def nodes(self):
        return make_nodes(self.kind, self.params.n)

    @property
    def is_lagrange(self) -> bool:
        return self.params.m == 0

    def __call__(self, x):
        """Evaluate at abscissae ``x`` in [-1, 1]."""
        return evaluate(self, x_to_angle(x))

    def at_angle(self, t):
        return evaluate(self, t)


def _unfold(c: np.ndarray, params: VPParams) -> np.ndarray:
    # q_j = a p_j - b p_{2n-j} on the ramp; collect everything on p_0..p_{n+m-1}
    n, m = params.n, params.m
    a = np.zeros(n + m)
    a[:n] = c
    if m > 0:
        j = np.arange(n - m + 1, n)
        a[j] = c[j] * (m + n - j) / (2 * m)
        a[2 * n - j] = -c[j] * (m - n + j) / (2 * m)
    return a


def vp_interpolate(kind: ChebyshevKind, params: VPParams, node_values) -> VPInterpolant:
    kind = ChebyshevKind.parse(kind)
    values = np.asarray(node_values, dtype=float)
    if values.ndim != 1 or values.shape[0] != params.n:
        raise ValueError(f"expected {params.n} node values, got shape {values.shape}")
    values = values.copy()
    values.setflags(write=False)
    c = values @ node_coefficients(kind, params.n)
    a = _unfold(c, params)
    c.setflags(write=False)
    a.setflags(write=False)
    return VPInterpolant(kind, params, values, c, a)


def lagrange_interpolate(kind: ChebyshevKind, n: int, node_values) -> VPInterpolant:
    """Lagrange interpolant, i.e. the ``m = 0`` VP interpolant."""
    return vp_interpolate(kind, VPParams(n, 0), node_values)


def evaluate(interp: VPInterpolant, t):
    """Value of the interpolant at angle(s) ``t``; O(n + m) per point."""
    t_arr = check_angle(t)
    flat = t_arr.ravel()
    a = interp._ortho_coefficients
    j = np.arange(a.shape[0])
    scaled = a * normalization(interp.kind, j)
    out = np.empty(flat.shape)
    step = max(1, _BLOCK_ENTRIES // max(1, a.shape[0]))
    for start in range(0, flat.shape[0], step):
        block = flat[start : start + step]
        out[start : start + step] = trig_factor(interp.kind, j[None, :], block[:, None]) @ scaled
    out = out.reshape(t_arr.shape)
    return float(out) if out.ndim == 0 else out
