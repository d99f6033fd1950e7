"""Benchmark functions with their companion Chebyshev kind, Jacobi weight
and default filter ratio."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .basis import ChebyshevKind, make_nodes
from .operators import JacobiWeight

__all__ = ["TestFunction", "TestCase", "CASES", "test_function_eval", "sample_at_nodes", "get_case"]


class TestFunction(str, enum.Enum):
    __test__ = False

    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"
    F5 = "f5"

    @classmethod
    def parse(cls, value) -> "TestFunction":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown test function {value!r}; expected f1..f5") from None


def _f1(x):
    return np.abs(x + 0.5) ** 3.5 * np.sin(x) / (1.0 + x * x)


def _f2(x):
    # C^0 but not C^1 at x = -1/3 and x = 1/3
    return np.where(
        x <= -1.0 / 3.0,
        32.0 / 9.0 * (1.0 + x),
        np.where(x <= 1.0 / 3.0, (1.0 - x) ** 3, 4.0 / 9.0 * (1.0 - x)),
    )


def _f3(x):
    return (1.0 + np.abs(x)) ** 0.25


def _f4(x):
    return np.abs(x)


def _f5(x):
    return np.sign(x) - x / 2.0


_EVALUATORS: dict[TestFunction, Callable] = {
    TestFunction.F1: _f1,
    TestFunction.F2: _f2,
    TestFunction.F3: _f3,
    TestFunction.F4: _f4,
    TestFunction.F5: _f5,
}


@dataclass(frozen=True)
class TestCase:
    """A test function paired with the setting it is benchmarked in."""

    __test__ = False

    id: TestFunction
    kind: ChebyshevKind
    weight: JacobiWeight
    theta_default: float | None
    evaluator: Callable

    def __call__(self, x):
        return test_function_eval(self.id, x)


CASES: dict[TestFunction, TestCase] = {
    TestFunction.F1: TestCase(TestFunction.F1, ChebyshevKind.W3, JacobiWeight(0.6, 0.6), 0.4, _f1),
    TestFunction.F2: TestCase(TestFunction.F2, ChebyshevKind.W1, JacobiWeight(0.0, 0.0), 0.9, _f2),
    TestFunction.F3: TestCase(TestFunction.F3, ChebyshevKind.W4, JacobiWeight(0.5, 0.5), 0.3, _f3),
    TestFunction.F4: TestCase(TestFunction.F4, ChebyshevKind.W2, JacobiWeight(0.1, 0.1), 0.9, _f4),
    # the jump experiment sweeps theta, so there is no single default
    TestFunction.F5: TestCase(TestFunction.F5, ChebyshevKind.W2, JacobiWeight(1.0, 1.0), None, _f5),
}


def get_case(fid) -> TestCase:
    return CASES[TestFunction.parse(fid)]


def test_function_eval(fid, x):
    """Evaluate test function ``fid`` at ``x`` in [-1, 1]."""
    fid = TestFunction.parse(fid)
    x_arr = np.asarray(x, dtype=float)
    if np.any(np.abs(x_arr) > 1.0):
        raise ValueError("test functions are defined on [-1, 1] only")
    out = _EVALUATORS[fid](x_arr)
    return float(out) if np.ndim(out) == 0 else out


test_function_eval.__test__ = False


def sample_at_nodes(fid, kind: ChebyshevKind | str | None, n: int) -> np.ndarray:
    """Values of ``fid`` at the zeros of ``p_n(w)``.

    ``kind=None`` uses the kind paired with the function.
    """
    case = get_case(fid)
    kind = case.kind if kind is None else ChebyshevKind.parse(kind)
    return np.asarray(test_function_eval(case.id, make_nodes(kind, n).x_nodes), dtype=float)
