import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, special

from vpinterp.basis import (
    ChebyshevKind,
    check_angle,
    darboux_kernel,
    make_nodes,
    ortho_matrix,
    ortho_poly_eval,
    total_mass,
    trig_factor,
)

KINDS = list(ChebyshevKind)

# Jacobi parameters (alpha, beta) of each weight
JACOBI = {
    ChebyshevKind.W1: (-0.5, -0.5),
    ChebyshevKind.W2: (0.5, 0.5),
    ChebyshevKind.W3: (-0.5, 0.5),
    ChebyshevKind.W4: (0.5, -0.5),
}


def scipy_orthonormal(kind, j, x):
    """Orthonormal polynomial built from scipy's Jacobi polynomials and the
    closed-form Jacobi norm."""
    a, b = JACOBI[kind]
    if kind is ChebyshevKind.W1 and j == 0:
        log_h = np.log(np.pi)
    else:
        lg = special.gammaln
        log_h = (
            (a + b + 1) * np.log(2)
            - np.log(2 * j + a + b + 1)
            + lg(j + a + 1) + lg(j + b + 1) - lg(j + a + b + 1) - lg(j + 1)
        )
    return special.eval_jacobi(j, a, b, x) / np.exp(0.5 * log_h)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("j", [0, 1, 2, 5, 17, 40])
def test_matches_scipy_jacobi(kind, j):
    t = np.linspace(0.05, np.pi - 0.05, 101)
    ours = ortho_poly_eval(kind, j, t)
    ref = scipy_orthonormal(kind, j, np.cos(t))
    np.testing.assert_allclose(ours, ref, rtol=1e-9, atol=1e-9)


@pytest.mark.parametrize("kind", KINDS)
def test_orthonormal_under_quadrature(kind):
    # an independent adaptive quadrature in the angle variable
    w_t = {
        ChebyshevKind.W1: lambda t: 1.0,
        ChebyshevKind.W2: lambda t: np.sin(t) ** 2,
        ChebyshevKind.W3: lambda t: 2 * np.cos(t / 2) ** 2,
        ChebyshevKind.W4: lambda t: 2 * np.sin(t / 2) ** 2,
    }[kind]
    for i, j in [(0, 0), (3, 3), (2, 5), (7, 7), (4, 9)]:
        val, _ = integrate.quad(
            lambda t: ortho_poly_eval(kind, i, t) * ortho_poly_eval(kind, j, t) * w_t(t), 0, np.pi, limit=200
        )
        assert val == pytest.approx(float(i == j), abs=1e-10)


@pytest.mark.parametrize("kind", KINDS)
def test_gauss_rule_integrates_products_exactly(kind):
    # N-point rule on the zeros is exact up to degree 2N-1
    n = 12
    nodes = make_nodes(kind, 2 * n)
    P = ortho_matrix(kind, 2 * n, nodes.t_nodes)
    gram = P.T @ (nodes.christoffel[:, None] * P)
    np.testing.assert_allclose(gram, np.eye(2 * n), atol=1e-12)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [1, 2, 7, 64])
def test_nodes_are_zeros_and_christoffel(kind, n):
    nodes = make_nodes(kind, n)
    assert np.all(np.diff(nodes.t_nodes) > 0)
    assert np.all(np.diff(nodes.x_nodes) < 0)
    np.testing.assert_allclose(ortho_poly_eval(kind, n, nodes.t_nodes), 0, atol=1e-10)
    # lambda_k = 1 / sum_{j<n} p_j(x_k)^2
    P = ortho_matrix(kind, n, nodes.t_nodes)
    np.testing.assert_allclose(nodes.christoffel, 1 / np.sum(P**2, axis=1), rtol=1e-12)
    assert nodes.christoffel.sum() == pytest.approx(total_mass(kind), rel=1e-13)


def test_node_examples():
    w1 = make_nodes("w1", 4)
    np.testing.assert_allclose(w1.t_nodes, np.array([1, 3, 5, 7]) * np.pi / 8)
    np.testing.assert_allclose(w1.christoffel, np.pi / 4)
    w2 = make_nodes(ChebyshevKind.W2, 3)
    np.testing.assert_allclose(w2.x_nodes, [np.sqrt(0.5), 0, -np.sqrt(0.5)], atol=1e-15)


def test_nodes_are_read_only():
    nodes = make_nodes("w3", 5)
    with pytest.raises(ValueError):
        nodes.t_nodes[0] = 0.0


@pytest.mark.parametrize("bad", [0, -3, 2.5])
def test_make_nodes_rejects_bad_n(bad):
    with pytest.raises(ValueError):
        make_nodes("w1", bad)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("j", [0, 1, 6, 31])
def test_endpoint_limits_are_continuous(kind, j):
    for edge in (0.0, np.pi):
        at = ortho_poly_eval(kind, j, edge)
        near = ortho_poly_eval(kind, j, edge + (1e-7 if edge == 0 else -1e-7))
        assert np.isfinite(at)
        assert at == pytest.approx(near, rel=1e-5, abs=1e-9)


def test_endpoint_values():
    # p_j(W2) at x=1 is sqrt(2/pi)(j+1); p_j(W4) at x=1 is (2j+1)/sqrt(pi)
    assert ortho_poly_eval("w2", 4, 0.0) == pytest.approx(np.sqrt(2 / np.pi) * 5)
    assert ortho_poly_eval("w4", 3, 0.0) == pytest.approx(7 / np.sqrt(np.pi))
    assert ortho_poly_eval("w3", 3, np.pi) == pytest.approx(-7 / np.sqrt(np.pi))
    assert ortho_poly_eval("w1", 0, 1.0) == pytest.approx(1 / np.sqrt(np.pi))


def test_scalar_in_scalar_out():
    assert isinstance(ortho_poly_eval("w1", 3, 0.4), float)
    assert ortho_poly_eval("w1", 3, np.array([0.4])).shape == (1,)


def test_angle_validation():
    with pytest.raises(ValueError):
        ortho_poly_eval("w1", 2, -0.1)
    with pytest.raises(ValueError):
        ortho_poly_eval("w1", 2, 3.2)
    with pytest.raises(TypeError):
        ortho_poly_eval("w1", 1.5, 0.3)
    # rounding noise just outside [0, pi] is clipped
    assert check_angle(np.pi + 1e-14) == pytest.approx(np.pi)


def test_kind_parse():
    assert ChebyshevKind.parse("W3") is ChebyshevKind.W3
    assert ChebyshevKind.parse(2) is ChebyshevKind.W2
    with pytest.raises(ValueError):
        ChebyshevKind.parse("w5")


@pytest.mark.parametrize("kind", KINDS)
def test_darboux_kernel_matches_sum(kind):
    t = np.linspace(0.1, 3.0, 9)
    s = 1.234
    P = ortho_matrix(kind, 11, np.append(t, s))
    ref = P[:-1] @ P[-1]
    np.testing.assert_allclose(darboux_kernel(kind, 10, t, s), ref, rtol=1e-12, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(
    kind=st.sampled_from(KINDS),
    j=st.integers(0, 200),
    t=st.floats(0.0, np.pi, allow_nan=False),
)
def test_trig_factor_bounded_by_degree(kind, j, t):
    # |cos(jt)| <= 1; the quotient forms are bounded by their endpoint values
    bound = {ChebyshevKind.W1: 1, ChebyshevKind.W2: j + 1}.get(kind, 2 * j + 1)
    assert abs(float(trig_factor(kind, j, t))) <= bound * (1 + 1e-9)
