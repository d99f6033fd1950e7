import numpy as np
import pytest
from numpy.polynomial import chebyshev as C

from vpinterp.basis import ChebyshevKind, make_nodes
from vpinterp.filtered import VPParams, fundamental_vp_sum
from vpinterp.operators import JacobiWeight, evaluate, lagrange_interpolate, vp_interpolate, x_to_angle

KINDS = list(ChebyshevKind)


def random_poly(rng, degree):
    coef = rng.standard_normal(degree + 1)
    coef[-1] = np.sign(coef[-1]) * (1.0 + abs(coef[-1]))
    return lambda x: C.chebval(x, coef)


def test_weight_values():
    u = JacobiWeight(0.5, 1.5)
    x = np.array([-0.9, -0.2, 0.0, 0.4, 0.99])
    np.testing.assert_allclose(u(x), (1 - x) ** 0.5 * (1 + x) ** 1.5)
    np.testing.assert_allclose(u.at_angle(np.arccos(x)), u(x), rtol=1e-12)
    assert u.at_angle(0.0) == 0.0
    assert JacobiWeight(0, 0).at_angle(np.pi) == 1.0
    assert u.vanishes_at_plus_one and u.vanishes_at_minus_one
    assert not JacobiWeight(0, 0.2).vanishes_at_plus_one
    assert str(JacobiWeight(0.5, 0.4)) == "v^(0.5,0.4)"


@pytest.mark.parametrize("g,d", [(-0.1, 0), (0, -1), (np.nan, 0), (0, np.inf)])
def test_weight_rejects_bad_exponents(g, d):
    with pytest.raises(ValueError):
        JacobiWeight(g, d)


def test_x_to_angle():
    np.testing.assert_allclose(x_to_angle([1.0, 0.0, -1.0]), [0, np.pi / 2, np.pi])
    with pytest.raises(ValueError):
        x_to_angle(1.5)


@pytest.mark.parametrize("kind", KINDS)
def test_constants_reproduced(kind):
    interp = vp_interpolate(kind, VPParams(20, 7), np.ones(20))
    t = np.linspace(0, np.pi, 501)
    np.testing.assert_allclose(interp.at_angle(t), 1.0, atol=1e-10)


@pytest.mark.parametrize("kind", KINDS)
def test_interpolates_at_nodes(kind):
    rng = np.random.default_rng(3)
    n = 27
    data = rng.standard_normal(n)
    nodes = make_nodes(kind, n)
    for m in (0, 5, 13, 26):
        interp = vp_interpolate(kind, VPParams(n, m), data)
        np.testing.assert_allclose(evaluate(interp, nodes.t_nodes), data, atol=1e-9)
        np.testing.assert_allclose(interp(nodes.x_nodes), data, atol=1e-9)


@pytest.mark.parametrize("kind", KINDS)
def test_invariance_degree_n_minus_m(kind):
    rng = np.random.default_rng(11)
    n, m = 30, 9
    nodes = make_nodes(kind, n)
    x = np.linspace(-1, 1, 401)
    for _ in range(5):
        p = random_poly(rng, n - m)
        interp = vp_interpolate(kind, VPParams(n, m), p(nodes.x_nodes))
        ref = p(x)
        assert np.max(np.abs(interp(x) - ref)) <= 1e-8 * np.max(np.abs(ref))


def test_identity_function_example():
    for kind in KINDS:
        nodes = make_nodes(kind, 10)
        interp = vp_interpolate(kind, VPParams(10, 3), nodes.x_nodes)
        t = np.linspace(0, np.pi, 77)
        np.testing.assert_allclose(interp.at_angle(t), np.cos(t), atol=1e-10)


@pytest.mark.parametrize("kind", KINDS)
def test_lagrange_reproduces_degree_n_minus_1(kind):
    rng = np.random.default_rng(5)
    n = 16
    nodes = make_nodes(kind, n)
    p = random_poly(rng, n - 1)
    x = np.linspace(-1, 1, 301)
    interp = lagrange_interpolate(kind, n, p(nodes.x_nodes))
    assert interp.is_lagrange
    assert np.max(np.abs(interp(x) - p(x))) <= 1e-8 * np.max(np.abs(p(x)))


@pytest.mark.parametrize("kind", KINDS)
def test_m0_is_lagrange(kind):
    rng = np.random.default_rng(8)
    data = rng.standard_normal(19)
    t = np.linspace(0, np.pi, 200)
    a = vp_interpolate(kind, VPParams(19, 0), data).at_angle(t)
    b = lagrange_interpolate(kind, 19, data).at_angle(t)
    np.testing.assert_allclose(a, b, atol=1e-10)


@pytest.mark.parametrize("kind", KINDS)
def test_evaluate_matches_naive_sum(kind):
    rng = np.random.default_rng(21)
    n, m = 40, 13
    params = VPParams(n, m)
    data = rng.standard_normal(n)
    t = rng.uniform(0, np.pi, 200)
    naive = sum(data[k - 1] * fundamental_vp_sum(kind, params, k, t) for k in range(1, n + 1))
    np.testing.assert_allclose(evaluate(vp_interpolate(kind, params, data), t), naive, atol=1e-10)


def test_length_mismatch():
    with pytest.raises(ValueError):
        vp_interpolate("w1", VPParams(5, 2), np.ones(4))
    with pytest.raises(ValueError):
        lagrange_interpolate("w2", 5, np.ones(6))


def test_scalar_evaluation_and_large_batches():
    interp = vp_interpolate("w4", VPParams(300, 100), np.linspace(-1, 1, 300) ** 2)
    assert isinstance(interp.at_angle(1.0), float)
    # crosses the chunking threshold of evaluate()
    t = np.linspace(0, np.pi, 20000)
    whole = interp.at_angle(t)
    np.testing.assert_allclose(whole[::997], interp.at_angle(t[::997]), rtol=0, atol=1e-13)
