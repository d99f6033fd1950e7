import numpy as np
import pytest

from vpinterp.analysis import (
    LebesgueReport,
    NonFiniteValueError,
    bound_violations,
    divergence_probe,
    lagrange_bounds_check,
    lagrange_lebesgue,
    lagrange_sweep,
    lebesgue_constant,
    lebesgue_function,
    lebesgue_sweep,
    make_grid,
    vp_bounds_check,
    weighted_sup_error,
)
from vpinterp.basis import ChebyshevKind, make_nodes
from vpinterp.filtered import VPParams, fundamental_matrix
from vpinterp.operators import JacobiWeight, lagrange_interpolate, vp_interpolate
from vpinterp.testfns import sample_at_nodes, test_function_eval

KINDS = list(ChebyshevKind)


def brute_lebesgue(kind, params, weight, t):
    nodes = make_nodes(kind, params.n)
    F = fundamental_matrix(kind, params, t, method="sum")
    return weight.at_angle(t) * np.sum(np.abs(F) / weight.at_angle(nodes.t_nodes), axis=1)


def test_grid_contents():
    nodes = make_nodes("w2", 7)
    grid = make_grid(nodes, 50)
    t = grid.t_points
    assert np.all(np.diff(t) > 1e-14)
    assert t[0] == 0.0 and t[-1] == np.pi
    for tk in nodes.t_nodes:
        assert np.min(np.abs(t - tk)) == 0.0
    mids = (nodes.t_nodes[1:] + nodes.t_nodes[:-1]) / 2
    assert np.all(np.min(np.abs(t[:, None] - mids[None, :]), axis=0) < 1e-14)
    assert len(grid) <= 50 + 7 + 6
    np.testing.assert_allclose(grid.x_points, np.cos(t))
    with pytest.raises(ValueError):
        make_grid(nodes, 1)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("m", [0, 4, 11])
def test_lebesgue_function_matches_brute_force(kind, m):
    params = VPParams(17, m)
    weight = JacobiWeight(0.3, 0.7)
    nodes = make_nodes(kind, 17)
    # random points plus points right at and next to nodes
    rng = np.random.default_rng(m)
    t = np.concatenate([rng.uniform(0, np.pi, 300), nodes.t_nodes, nodes.t_nodes + 1e-8, [0.0, np.pi]])
    t = np.clip(t, 0, np.pi)
    np.testing.assert_allclose(
        lebesgue_function(kind, params, weight, t), brute_lebesgue(kind, params, weight, t), rtol=1e-9, atol=1e-11
    )


@pytest.mark.parametrize("kind", KINDS)
def test_lebesgue_function_is_one_at_nodes(kind):
    params = VPParams(12, 5)
    nodes = make_nodes(kind, 12)
    vals = lebesgue_function(kind, params, JacobiWeight(0.2, 0.4), nodes.t_nodes)
    np.testing.assert_allclose(vals, 1.0, atol=1e-10)


@pytest.mark.parametrize("kind", KINDS)
def test_single_node_lagrange_constant_is_one(kind):
    assert lebesgue_constant(kind, VPParams(1, 0), JacobiWeight()) == pytest.approx(1.0, abs=1e-12)
    assert lagrange_lebesgue(kind, 1, JacobiWeight()) == pytest.approx(1.0, abs=1e-12)


def test_w1_unweighted_values():
    assert lebesgue_constant("w1", VPParams(200, 100), JacobiWeight()) == pytest.approx(1.42, abs=0.05)
    assert lebesgue_constant("w1", VPParams(1000, 900), JacobiWeight()) == pytest.approx(1.04, abs=0.05)


def test_lagrange_chebyshev_lebesgue_constant():
    # classical value for the Chebyshev zeros: 2/pi (log n + euler_gamma + log(8/pi)) + o(1)
    for n in (32, 128, 512):
        ref = 2 / np.pi * (np.log(n) + np.euler_gamma + np.log(8 / np.pi))
        assert lagrange_lebesgue("w1", n, JacobiWeight()) == pytest.approx(ref, abs=0.01)


def test_lagrange_log_growth_vs_power_growth():
    ns = [32, 128, 512, 2048]
    w1 = np.array([lagrange_lebesgue("w1", n, JacobiWeight()) for n in ns])
    assert np.all(np.diff(w1) > 0)
    assert np.all(w1 / np.log(ns) < 1.0)
    # outside the Lagrange conditions the growth is algebraic, here close to n^0.8
    w2 = lagrange_sweep("w2", JacobiWeight(0.1, 0.1), [16, 256]).values
    assert w2[1] > 5 * w2[0]


def test_empty_grid_rejected():
    from vpinterp.analysis import EvaluationGrid

    with pytest.raises(ValueError):
        lebesgue_constant("w1", VPParams(5, 2), JacobiWeight(), grid=EvaluationGrid(0, np.array([])))


def test_bounds_examples():
    assert vp_bounds_check(ChebyshevKind.W1, JacobiWeight(0.5, 0.5))
    assert not vp_bounds_check(ChebyshevKind.W2, JacobiWeight(0.0, 1.5))
    assert vp_bounds_check(ChebyshevKind.W1, JacobiWeight(1, 1))
    assert not lagrange_bounds_check(ChebyshevKind.W2, JacobiWeight(0.1, 0.1))
    assert vp_bounds_check(ChebyshevKind.W2, JacobiWeight(0.1, 0.1))
    assert lagrange_bounds_check(ChebyshevKind.W1, JacobiWeight(0, 0))
    assert lagrange_bounds_check(ChebyshevKind.W4, JacobiWeight(1.5, 1))
    assert vp_bounds_check(ChebyshevKind.W3, JacobiWeight(0.4, 1.5))
    assert bound_violations(ChebyshevKind.W3, JacobiWeight(0.4, 0)) == ["0<delta<=3/2"]


@pytest.mark.parametrize(
    "kind,gamma,delta,expected",
    [
        ("w2", 1.5, 0.5, True), ("w2", 1.6, 0.6, False), ("w2", 1.5, 0.4, False),
        ("w3", 1.0, 0.5, True), ("w3", 1.0, 0.4, False),
        ("w4", 0.5, 1.0, True), ("w4", 0.6, 1.0, True), ("w4", 0.4, 1.0, False), ("w4", 1.0, 1.1, False),
    ],
)
def test_vp_bounds_edges(kind, gamma, delta, expected):
    assert vp_bounds_check(kind, JacobiWeight(gamma, delta)) is expected


def test_bounds_reject_bad_operator():
    with pytest.raises(KeyError):
        bound_violations("w1", JacobiWeight(), "other")


def test_weighted_error_examples():
    n = 50
    params = VPParams.from_theta(n, 0.4)
    interp = vp_interpolate("w3", params, sample_at_nodes("f1", "w3", n))
    err = weighted_sup_error(interp, lambda x: test_function_eval("f1", x), JacobiWeight(0.6, 0.6))
    assert 3.7e-7 / 2 <= err <= 3.7e-7 * 2


def test_weighted_error_vanishes_on_invariance_space():
    rng = np.random.default_rng(0)
    coef = rng.standard_normal(21)
    p = np.polynomial.Chebyshev(coef)
    nodes = make_nodes("w4", 30)
    interp = vp_interpolate("w4", VPParams(30, 9), p(nodes.x_nodes))
    assert weighted_sup_error(interp, p, JacobiWeight(0.5, 0.5)) < 1e-8


def test_weighted_error_names_bad_abscissa():
    interp = lagrange_interpolate("w1", 5, np.ones(5))

    def f(x):
        return np.where(np.abs(x - 0.5) < 1e-3, np.nan, 1.0)

    with pytest.raises(NonFiniteValueError, match=r"x = 0\.5"):
        weighted_sup_error(interp, f, JacobiWeight(), grid=make_grid(base_count=7))


def test_weighted_error_skips_zero_weight_endpoints():
    # 1/(1-x) blows up at x = 1, where u = (1-x) kills it
    interp = lagrange_interpolate("w1", 4, np.zeros(4))
    err = weighted_sup_error(interp, lambda x: np.where(x < 1, 1 / np.where(x < 1, 1 - x, 1), np.inf),
                             JacobiWeight(1, 0), grid=make_grid(base_count=101))
    assert err == pytest.approx(1.0)


def test_report_and_sweep():
    report = lebesgue_sweep("w1", JacobiWeight(), 0.5, [20])
    assert report.sup_value == report.entries[0][2]
    assert report.n_values.tolist() == [20]
    with pytest.raises(ValueError):
        lebesgue_sweep("w1", JacobiWeight(), 0.5, [])
    r = LebesgueReport(ChebyshevKind.W1, JacobiWeight(), 0.5)
    with pytest.raises(NonFiniteValueError):
        r.add(10, 5, 0.0)


def test_sweep_decreases_with_theta():
    weight = JacobiWeight(0.5, 0.4)
    sups = [lebesgue_sweep("w2", weight, th, [40, 80], base_count=1024).sup_value for th in (0.1, 0.5, 0.9)]
    assert sups[0] > sups[1] > sups[2]


def test_divergence_probe():
    l_values = (2, 4, 8, 16, 32, 64)
    out = divergence_probe("w1", JacobiWeight(0.3, 1.5), l_values=l_values, base_count=1024).values
    assert np.all(np.diff(out) > 0)
    assert out[-1] / out[0] > 2
    ok = divergence_probe("w1", JacobiWeight(0.5, 0.5), l_values=l_values, base_count=1024).values
    assert ok.max() / ok.min() < 1.5
    assert len(divergence_probe("w2", JacobiWeight(0.5, 0.5), l_values=(3,)).entries) == 1
    for mu, nu, ls in [(2, 2, (1,)), (2, 4, (1,)), (1, 2, ()), (1, 2, (4, 2))]:
        with pytest.raises(ValueError):
            divergence_probe("w1", JacobiWeight(), mu, nu, ls)
