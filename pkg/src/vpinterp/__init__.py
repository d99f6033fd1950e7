"""Filtered (de la Vallee Poussin) interpolation at the zeros of the four
Chebyshev weights, with weighted Lebesgue-constant analysis."""

from .analysis import (
    EvaluationGrid,
    LebesgueReport,
    NonFiniteValueError,
    bound_violations,
    divergence_probe,
    lagrange_bounds_check,
    lagrange_lebesgue,
    lebesgue_constant,
    lebesgue_function,
    lebesgue_sweep,
    make_grid,
    vp_bounds_check,
    weighted_sup_error,
)
from .basis import ChebyshevKind, NodeSystem, darboux_kernel, make_nodes, ortho_poly_eval
from .filtered import (
    FilterCoefficients,
    VPParams,
    filter_coefficients,
    fundamental_lagrange,
    fundamental_vp_mean,
    fundamental_vp_sum,
    fundamental_vp_trig,
    q_poly_eval,
)
from .operators import JacobiWeight, VPInterpolant, evaluate, lagrange_interpolate, vp_interpolate
from .testfns import CASES, TestFunction, sample_at_nodes, test_function_eval

__version__ = "0.1.0"
