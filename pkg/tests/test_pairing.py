import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import roots_jacobi

from bc1jacobi.errors import ModeError, ParameterOutOfRange
from bc1jacobi.laurent import LaurentPoly as L
from bc1jacobi.multiplicity import Multiplicity
from bc1jacobi.nonsym import gram_schmidt_E
from bc1jacobi.pairing import (
    ct_pair,
    delta_expand,
    engine,
    gauss_jacobi_rule,
    mat_pair,
    mat_pair_quadrature,
    quad_pair,
    vec_pair,
)
from bc1jacobi.transport import gamma
from bc1jacobi.vector import build_M

K11 = Multiplicity(1, 1)


@pytest.mark.parametrize("k, want", [
    ((0, 1), {0: 1, 2: F(-1, 2), -2: F(-1, 2)}),
    ((1, 1), {0: 1, 1: F(-1, 4), -1: F(-1, 4), 2: F(-1, 2), -2: F(-1, 2), 3: F(1, 4), -3: F(1, 4)}),
    ((0, 0), {0: 1}),
])
def test_delta_expand(k, want):
    assert delta_expand(Multiplicity(*k)) == L(want)


def test_delta_rescaled():
    assert delta_expand(Multiplicity(0, 1, scale=2)) == L({0: 1, 4: F(-1, 2), -4: F(-1, 2)})


@pytest.mark.parametrize("k1, k2", [(a, b) for a in range(4) for b in range(4)])
def test_delta_symmetric_and_vanishes_at_one(k1, k2):
    d = delta_expand(Multiplicity(k1, k2))
    assert d.is_symmetric()
    assert d(1) == (1 if k1 == k2 == 0 else 0)


def test_delta_float_mode_rejected():
    with pytest.raises(ModeError):
        delta_expand(Multiplicity(0.5, 1))


@pytest.mark.parametrize("p, q, want", [
    (L.constant(1), L.constant(1), 1),
    (L.constant(1), L.z(), F(-1, 4)),
    (L.z(), L.z(), 1),
])
def test_ct_pair(p, q, want):
    assert ct_pair(engine(K11), p, q) == want


def test_ct_pair_needs_exact():
    with pytest.raises(ModeError):
        ct_pair(engine(Multiplicity(0.5, 0.5)), L.z(), L.z())


# --- Gauss-Jacobi ---

def test_gauss_chebyshev_closed_form():
    r = gauss_jacobi_rule(-0.5, -0.5, 3)
    np.testing.assert_allclose(r.nodes, [math.cos(5 * math.pi / 6), 0, math.cos(math.pi / 6)], atol=1e-14)
    np.testing.assert_allclose(r.weights, [math.pi / 3] * 3, rtol=1e-14)


def test_gauss_legendre_midpoint():
    r = gauss_jacobi_rule(0, 0, 1)
    assert r.nodes[0] == 0 and r.weights[0] == pytest.approx(2, abs=1e-15)


def test_moment_half_minus_half():
    r = gauss_jacobi_rule(0.5, -0.5, 2)
    assert abs(r.weights.sum() - math.pi) < 1e-14
    # x-moment: int x (1-x)^(1/2) (1+x)^(-1/2) dx = -pi/2
    assert abs(r.integrate(r.nodes) + math.pi / 2) < 1e-14


@pytest.mark.parametrize("a, b, n", [(0.5, -0.5, 7), (2.5, 0.5, 12), (-0.5, -0.5, 20), (3.5, 1.5, 9), (0.0, 0.0, 15)])
def test_against_scipy_rule(a, b, n):
    x, w = roots_jacobi(n, a, b)
    r = gauss_jacobi_rule(a, b, n)
    np.testing.assert_allclose(r.nodes, x, atol=1e-13)
    np.testing.assert_allclose(r.weights, w, rtol=1e-11)
    assert np.all(np.diff(r.nodes) > 0) and np.all(r.weights > 0)
    assert np.all(np.abs(r.nodes) < 1)


def test_rule_parameters_checked():
    with pytest.raises(ParameterOutOfRange):
        gauss_jacobi_rule(-1.0, 0.0, 3)
    with pytest.raises(ParameterOutOfRange):
        gauss_jacobi_rule(0.0, 0.0, 0)


# --- quadrature pairing ---

@pytest.mark.parametrize("p, q, want", [
    (L.constant(1), L.constant(1), 1.0),
    (L.constant(1), L.z(), -0.25),
])
def test_quad_pair_matches_examples(p, q, want):
    eng = engine(Multiplicity(1, 1, mode="float"))
    assert abs(quad_pair(eng, p, q) - want) < 1e-12


def test_quad_pair_non_integer_self_consistent():
    eng = engine(Multiplicity(0, 0.5))
    p = L.z(2)
    v = quad_pair(eng, p, p)
    assert v > 0 and math.isfinite(v)
    assert abs(quad_pair(eng, p, p, n=10) - quad_pair(eng, p, p, n=20)) < 1e-12
    # k2 = 1/2 flattens the weight: 2^(1/2)/pi * int (1 + (2x^2-1)... ) dx closed form
    exact = math.sqrt(2) / math.pi * 2  # z^-2 z^2 = 1; int_{-1}^{1} 1 dx = 2
    assert abs(v - exact) < 1e-13


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 4), st.integers(0, 2), st.integers(-12, 12), st.integers(-12, 12))
def test_quad_matches_ct(k1, k2, e1, e2):
    exact = ct_pair(engine(Multiplicity(k1, k2)), L.z(e1), L.z(e2))
    approx = quad_pair(engine(Multiplicity(k1, k2, mode="float")), L.z(e1), L.z(e2))
    assert abs(approx - float(exact)) <= 1e-10 * (1 + abs(float(exact)))


@settings(max_examples=40)
@given(st.dictionaries(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=1, max_size=5).map(L),
       st.dictionaries(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=5), max_size=5).map(L))
def test_ct_symmetric_and_positive(p, q):
    eng = engine(Multiplicity(2, 1))
    assert ct_pair(eng, p, q) == ct_pair(eng, q, p)
    if not p.is_zero():
        assert ct_pair(eng, p, p) > 0


# --- vector and matrix pairings ---

def test_vec_pair_examples():
    eng = engine(K11)
    one = gamma(L.constant(1))
    assert vec_pair(eng, one, one) == 1
    assert vec_pair(eng, gamma(gram_schmidt_E(K11, 0)), gamma(gram_schmidt_E(K11, 1))) == 0
    P = gamma(L({1: 1, 0: F(1, 4)}))
    assert vec_pair(eng, P, P) == F(15, 16)


@settings(max_examples=30)
@given(st.dictionaries(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=5), max_size=5).map(L),
       st.dictionaries(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=5), max_size=5).map(L))
def test_gamma_is_unitary(p, q):
    eng = engine(K11)
    assert vec_pair(eng, gamma(p), gamma(q)) == ct_pair(eng, p, q)


def test_mat_pair_examples():
    eng = engine(K11)
    M0, M1 = build_M(K11, 0), build_M(K11, 1)
    assert mat_pair(eng, M0, M0) == ((1, 0), (0, F(15, 16)))
    assert mat_pair(eng, M0, M1) == ((0, 0), (0, 0))
    G = mat_pair(eng, M1, M1)
    e_m1, e_2 = gram_schmidt_E(K11, -1), gram_schmidt_E(K11, 2)
    assert G == ((ct_pair(eng, e_m1, e_m1), 0), (0, ct_pair(eng, e_2, e_2)))


@pytest.mark.parametrize("k", [(1, 1), (0, 1), (2, 1)])
def test_mat_pair_against_direct_quadrature(k):
    km = Multiplicity(*k)
    eng = engine(km)
    for N in range(3):
        for K in range(3):
            A, B = build_M(km, N), build_M(km, K)
            exact = np.array(mat_pair(eng, A, B), dtype=float)
            direct = mat_pair_quadrature(km, A, B)
            np.testing.assert_allclose(direct, exact, atol=1e-12)


def test_mat_pair_gram_positive_definite():
    from bc1jacobi.laurent import PolyX
    from bc1jacobi.transport import PolyMat2

    rng = np.random.default_rng(7)
    eng = engine(Multiplicity(1, 2))
    for _ in range(10):
        A = PolyMat2([[PolyX({d: F(int(rng.integers(-4, 5))) for d in range(3)}) for _ in range(2)]
                      for _ in range(2)])
        G = mat_pair(eng, A, A)
        if A.column(0) == A.column(1) or A.is_zero():
            continue
        assert G[0][1] == G[1][0]
        assert G[0][0] > 0 and G[0][0] * G[1][1] - G[0][1] * G[1][0] >= 0
