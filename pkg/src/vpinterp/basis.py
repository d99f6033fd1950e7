"""Orthonormal Chebyshev polynomials of the four kinds, their zeros and
Christoffel numbers.

Everything is evaluated in the angle variable ``t = arccos(x)``. The
trigonometric closed forms are used directly; no recurrences.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

__all__ = [
    "EPS_SING",
    "ChebyshevKind",
    "NodeSystem",
    "check_angle",
    "trig_factor",
    "normalization",
    "ortho_poly_eval",
    "ortho_matrix",
    "make_nodes",
    "darboux_kernel",
    "total_mass",
]

# |sin t|, |cos(t/2)|, |sin(t/2)| below this switch to the limit values
EPS_SING = 1e-9

_ANGLE_TOL = 1e-12


class ChebyshevKind(str, enum.Enum):
    """The four Chebyshev weights.

    ``W1 = (1-x^2)^(-1/2)``, ``W2 = (1-x^2)^(1/2)``,
    ``W3 = ((1+x)/(1-x))^(1/2)``, ``W4 = ((1-x)/(1+x))^(1/2)``.
    """

    W1 = "w1"
    W2 = "w2"
    W3 = "w3"
    W4 = "w4"

    @classmethod
    def parse(cls, value: "ChebyshevKind | str | int") -> "ChebyshevKind":
        if isinstance(value, cls):
            return value
        if isinstance(value, (int, np.integer)):
            value = f"w{int(value)}"
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown Chebyshev kind {value!r}; expected one of w1, w2, w3, w4") from None

    def weight(self, x):
        """Value of the weight function at ``x`` in (-1, 1)."""
        x = np.asarray(x, dtype=float)
        if self is ChebyshevKind.W1:
            return 1.0 / np.sqrt(1.0 - x * x)
        if self is ChebyshevKind.W2:
            return np.sqrt(1.0 - x * x)
        if self is ChebyshevKind.W3:
            return np.sqrt((1.0 + x) / (1.0 - x))
        return np.sqrt((1.0 - x) / (1.0 + x))


def check_angle(t) -> np.ndarray:
    """Validate angles in ``[0, pi]`` and clip rounding noise at the ends."""
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)):
        raise ValueError("angle must be finite")
    if np.any(t < -_ANGLE_TOL) or np.any(t > np.pi + _ANGLE_TOL):
        bad = t[(t < -_ANGLE_TOL) | (t > np.pi + _ANGLE_TOL)].ravel()[0]
        raise ValueError(f"angle {bad!r} outside [0, pi]")
    return np.clip(t, 0.0, np.pi)


def _safe_ratio(num, den, limit):
    small = np.abs(den) < EPS_SING
    out = num / np.where(small, 1.0, den)
    return np.where(small, limit, out)


def trig_factor(kind: ChebyshevKind, j, t) -> np.ndarray:
    """Unnormalized trigonometric form of the degree-``j`` polynomial.

    W1: ``cos(jt)``; W2: ``sin((j+1)t)/sin t``; W3: ``cos((2j+1)t/2)/cos(t/2)``;
    W4: ``sin((2j+1)t/2)/sin(t/2)``. The removable singularities at
    ``t = 0, pi`` are replaced by the continuous extension.
    ``j`` and ``t`` broadcast against each other.
    """
    kind = ChebyshevKind.parse(kind)
    j = np.asarray(j)
    t = np.asarray(t, dtype=float)
    sign = np.where(j % 2 == 0, 1.0, -1.0)
    if kind is ChebyshevKind.W1:
        return np.cos(j * t)
    if kind is ChebyshevKind.W2:
        limit = np.where(t < np.pi / 2, 1.0, sign) * (j + 1)
        return _safe_ratio(np.sin((j + 1) * t), np.sin(t), limit)
    half = (2 * j + 1) * t / 2
    if kind is ChebyshevKind.W3:
        return _safe_ratio(np.cos(half), np.cos(t / 2), sign * (2 * j + 1))
    return _safe_ratio(np.sin(half), np.sin(t / 2), (2 * j + 1) * np.ones_like(half))


def normalization(kind: ChebyshevKind, j) -> np.ndarray:
    """Factor turning :func:`trig_factor` into the orthonormal polynomial."""
    kind = ChebyshevKind.parse(kind)
    j = np.asarray(j)
    if kind is ChebyshevKind.W1:
        return np.where(j == 0, 1.0 / np.sqrt(np.pi), np.sqrt(2.0 / np.pi))
    if kind is ChebyshevKind.W2:
        return np.full(j.shape, np.sqrt(2.0 / np.pi))
    return np.full(j.shape, 1.0 / np.sqrt(np.pi))


def ortho_poly_eval(kind: ChebyshevKind, j, t):
    """Orthonormal polynomial ``p_j(w, cos t)``.

    Parameters
    ----------
    kind : ChebyshevKind or str
        Which of the four weights.
    j : int or array_like of int
        Degree(s), ``j >= 0``.
    t : float or array_like
        Angle(s) in ``[0, pi]``; broadcast against ``j``.

    Returns
    -------
    float or ndarray
    """
    j_arr = np.asarray(j)
    if not np.issubdtype(j_arr.dtype, np.integer):
        raise TypeError("degree must be an integer")
    if np.any(j_arr < 0):
        raise ValueError("degree must be non-negative")
    t_arr = check_angle(t)
    out = normalization(kind, j_arr) * trig_factor(kind, j_arr, t_arr)
    if out.ndim == 0:
        return float(out)
    return out


def ortho_matrix(kind: ChebyshevKind, degree: int, t) -> np.ndarray:
    """Matrix ``P[i, j] = p_j(t_i)`` for ``j = 0..degree-1``."""
    t = check_angle(np.atleast_1d(t))
    j = np.arange(degree)
    return normalization(kind, j) * trig_factor(kind, j[None, :], t[:, None])


def total_mass(kind: ChebyshevKind) -> float:
    """Integral of the weight over [-1, 1]."""
    return np.pi / 2 if ChebyshevKind.parse(kind) is ChebyshevKind.W2 else np.pi


@dataclass(frozen=True)
class NodeSystem:
    """Zeros of ``p_n(w)`` and the matching Christoffel numbers.

    Nodes are stored 0-based for ``k = 1..n``: angles ascending, abscissae
    descending.
    """

    kind: ChebyshevKind
    n: int
    t_nodes: np.ndarray
    x_nodes: np.ndarray
    christoffel: np.ndarray

    def __post_init__(self):
        for name in ("t_nodes", "x_nodes", "christoffel"):
            getattr(self, name).setflags(write=False)

    @property
    def index(self) -> np.ndarray:
        """1-based node indices."""
        return np.arange(1, self.n + 1)


def make_nodes(kind: ChebyshevKind, n: int) -> NodeSystem:
    kind = ChebyshevKind.parse(kind)
    if int(n) != n or n < 1:
        raise ValueError(f"number of nodes must be a positive integer, got {n!r}")
    n = int(n)
    k = np.arange(1, n + 1, dtype=float)
    if kind is ChebyshevKind.W1:
        t = (2 * k - 1) * np.pi / (2 * n)
        lam = np.full(n, np.pi / n)
    elif kind is ChebyshevKind.W2:
        t = k * np.pi / (n + 1)
        lam = np.pi / (n + 1) * np.sin(t) ** 2
    elif kind is ChebyshevKind.W3:
        t = (2 * k - 1) * np.pi / (2 * n + 1)
        lam = 4 * np.pi / (2 * n + 1) * np.cos(t / 2) ** 2
    else:
        t = 2 * k * np.pi / (2 * n + 1)
        lam = 4 * np.pi / (2 * n + 1) * np.sin(t / 2) ** 2
    return NodeSystem(kind, n, t, np.cos(t), lam)


def darboux_kernel(kind: ChebyshevKind, n: int, t, s):
    """Darboux kernel ``K_n(cos t, cos s) = sum_{j<=n} p_j(t) p_j(s)``.

    ``t`` and ``s`` broadcast; the result has their broadcast shape.
    """
    if n < 0:
        raise ValueError("kernel degree must be non-negative")
    t, s = np.broadcast_arrays(check_angle(t), check_angle(s))
    j = np.arange(n + 1).reshape((-1,) + (1,) * t.ndim)
    norm2 = normalization(kind, j) ** 2
    out = np.sum(norm2 * trig_factor(kind, j, t) * trig_factor(kind, j, s), axis=0)
    if out.ndim == 0:
        return float(out)
    return out
