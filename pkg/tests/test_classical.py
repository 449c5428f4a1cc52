from fractions import Fraction as F

import numpy as np
import pytest
from scipy.special import eval_jacobi

from bc1jacobi.classical import (
    JacobiParams,
    build_N_family,
    conj_U,
    conj_U_inv,
    decompose_E,
    decomposition_check,
    frak_D_apply,
    frak_D_check,
    frak_D_conjugation_check,
    frak_L,
    frak_L_from_conjugation,
    jacobi_leading_coefficient,
    jacobi_poly,
    jacobi_poly_hypergeometric,
    monic_from_M,
    monic_uniqueness_check,
    pochhammer,
    shift_check,
    spanning_set,
    square_diagonalization_check,
    naive_N_leading_coefficient,
    transmute_check,
    weight_diagonalization_check,
)
from bc1jacobi.errors import ModeError
from bc1jacobi.laurent import LaurentPoly as L, PolyX
from bc1jacobi.multiplicity import Multiplicity
from bc1jacobi.nonsym import gram_schmidt_E
from bc1jacobi.pairing import gauss_jacobi_rule
from bc1jacobi.transport import PolyMat2
from bc1jacobi.vector import build_M, dk_x_apply

K11 = Multiplicity(1, 1)
x = PolyX.x()
H = F(1, 2)


def test_params_convention():
    p = JacobiParams.from_multiplicity(K11)
    assert (p.alpha, p.beta) == (F(3, 2), F(1, 2))
    assert p.to_multiplicity() == K11
    assert JacobiParams("7/2", "3/2").to_multiplicity() == Multiplicity(2, 2)


def test_jacobi_examples():
    assert jacobi_poly(3, 5, 0) == PolyX.constant(1)
    a, b = F(2, 7), F(-1, 3)
    assert jacobi_poly(a, b, 1) == x * ((a + b + 2) / 2) + (a - b) / 2
    assert jacobi_poly(F(5, 2), H, 1) == x * F(5, 2) + 1
    with pytest.raises(ValueError):
        jacobi_poly(0, 0, -1)


@pytest.mark.parametrize("a, b", [(F(3, 2), H), (F(-1, 2), F(-1, 2)), (F(7, 2), F(3, 2)), (F(2, 3), F(5, 4)), (0, 0)])
def test_recurrence_matches_hypergeometric(a, b):
    for n in range(21):
        P = jacobi_poly(a, b, n)
        assert P == jacobi_poly_hypergeometric(a, b, n)
        assert P(1) == pochhammer(F(a) + 1, n) / pochhammer(1, n)
        assert P.leading_coeff() == jacobi_leading_coefficient(a, b, n)


@pytest.mark.parametrize("a, b, n", [(1.5, 0.5, 7), (2.5, 0.5, 12), (0.25, 3.0, 5)])
def test_jacobi_against_scipy(a, b, n):
    xs = np.linspace(-1, 1, 9)
    P = jacobi_poly(F(a), F(b), n)
    np.testing.assert_allclose([float(P(F(v))) for v in xs], eval_jacobi(n, a, b, xs), rtol=1e-12, atol=1e-12)


def test_N_family_examples():
    p = JacobiParams(F(3, 2), H)
    assert build_N_family(p, 0) == PolyMat2.identity()
    assert build_N_family(p, 1) == PolyMat2([[x * F(5, 2) + 1, 0], [0, x * F(5, 2)]])


def test_N_family_orthogonal_under_diagonal_weight():
    p = JacobiParams(F(3, 2), H)
    a, b = float(p.alpha), float(p.beta)
    N1, N2 = build_N_family(p, 1), build_N_family(p, 2)
    r11 = gauss_jacobi_rule(a + 1, b, 6)
    r22 = gauss_jacobi_rule(a, b + 1, 6)
    g11 = r11.integrate(np.array([float(N1[0, 0](F(t)) * N2[0, 0](F(t))) for t in r11.nodes]))
    g22 = r22.integrate(np.array([float(N1[1, 1](F(t)) * N2[1, 1](F(t))) for t in r22.nodes]))
    assert abs(g11) < 1e-13 and abs(g22) < 1e-13


def test_naive_leading_coefficient_differs():
    p = JacobiParams(F(3, 2), H)
    assert naive_N_leading_coefficient(p, 1) == F(3, 2)
    assert jacobi_leading_coefficient(p.alpha + 1, p.beta, 1) == F(5, 2)


def test_weight_diagonalization():
    assert weight_diagonalization_check().status == "exact"


def test_conj_round_trip():
    A = PolyMat2([[x, 1], [x * x, 3]])
    assert conj_U_inv(conj_U(A)) == A
    assert conj_U(((1, 0), (0, 1))) == ((1, 0), (0, 1))


def test_monic_examples():
    for k in [(0, 1), (1, 1), (3, 2)]:
        assert monic_from_M(Multiplicity(*k), 0) == PolyMat2.identity()
    M1 = monic_from_M(K11, 1)
    assert M1.degree() == 1 and M1.leading_coefficient() == ((1, 0), (0, 1))


@pytest.mark.parametrize("k", [(0, 1), (1, 1), (2, 1), (1, 2), (3, 2)])
def test_monic_uniqueness(k):
    assert monic_uniqueness_check(Multiplicity(*k), 6).status == "exact"


def test_decompose_examples():
    d0 = decompose_E(Multiplicity(2, 1), 0)
    assert d0.prefactor == H and d0.E_minus == L.constant(1)
    d1 = decompose_E(K11, 1)
    assert d1.prefactor == F(2, 5)
    assert d1.c_N == F(1, 6)
    assert d1.E_minus == L({-1: 1, 1: F(3, 5), 0: F(2, 5)}) == gram_schmidt_E(K11, -1)
    assert d1.E_plus == gram_schmidt_E(K11, 2)
    # prefactor N!/(a+b+1)_N gives 1/3 here and does not normalize E(-1)
    assert d1.factorial_prefactor == F(1, 3) and not d1.prefactor_is_factorial_ratio
    assert d1.closed_form_prefactor == d1.prefactor


def test_sign_flipped_companion_line_does_not_reproduce():
    assert not decompose_E(K11, 0).flipped_E_plus_matches
    assert not decompose_E(K11, 2).flipped_E_plus_matches


@pytest.mark.parametrize("k", [(0, 1), (1, 1), (2, 1), (1, 2), (3, 2)])
def test_decomposition(k):
    v = decomposition_check(Multiplicity(*k), 6)
    assert v.status == "exact"
    assert "N!/(a+b+1)_N" in v.detail


def test_decompose_rejects_float():
    with pytest.raises(ModeError):
        decompose_E(Multiplicity(0.5, 0.5), 1)


def test_frak_L_example():
    p = JacobiParams(F(3, 2), H)
    assert frak_L(p, 2) == ((0, F(-7, 2)), (F(-9, 2), 1))
    assert frak_L(p, 2) == frak_L_from_conjugation(K11, 2)


def test_frak_D_examples():
    p = JacobiParams(F(3, 2), H)
    assert frak_D_apply(p, PolyMat2.identity()) == PolyMat2(frak_L(p, 0))
    assert frak_D_check(p, 1).status == "exact"
    for N in range(8):
        assert frak_D_check(p, N).status == "exact"


@pytest.mark.parametrize("k", [(0, 1), (1, 1), (2, 1), (1, 2), (3, 2)])
def test_frak_D_is_conjugate(k):
    assert frak_D_conjugation_check(Multiplicity(*k), 4).status == "exact"


def test_shift_examples():
    p = JacobiParams(F(3, 2), H)
    assert shift_check(p, 0).status == "exact"
    Pm = jacobi_poly(p.alpha, p.beta + 1, 1)
    assert (x + 1) * Pm.derivative() + Pm * (p.beta + 1) == x * F(25, 4) + F(5, 2)
    assert shift_check(JacobiParams(F(7, 2), F(3, 2)), 5).status == "exact"


@pytest.mark.parametrize("ab", [(F(3, 2), H), (F(5, 2), H), (F(7, 2), F(3, 2))])
def test_shift_range(ab):
    p = JacobiParams(*ab)
    assert all(shift_check(p, N).status == "exact" for N in range(13))


def test_transmute_examples():
    assert transmute_check(K11, [PolyMat2([[1, 2], [3, 4]])]).status == "exact"
    assert transmute_check(K11, [PolyMat2.identity() * x]).status == "exact"
    assert transmute_check(K11, [build_M(K11, 2)]).status == "exact"
    for k in [(1, 1), (0, 1)]:
        assert transmute_check(Multiplicity(*k), degree=8).status == "exact"


def test_transmute_fails_for_wrong_target():
    # shifting k1 instead of k2 does not intertwine
    A = PolyMat2.identity() * (x * x)
    lhs = dk_x_apply(Multiplicity(2, 1), A.derivative())
    rhs = dk_x_apply(K11, A).derivative()
    assert lhs != rhs


def test_spanning_set_size():
    assert len(spanning_set(3)) == 16


@pytest.mark.parametrize("k", [(0, 1), (1, 1), (2, 1)])
def test_centred_square_is_diagonalized(k):
    km = Multiplicity(*k)
    assert square_diagonalization_check(km, 6, H).status == "exact"
    assert square_diagonalization_check(km, 6, 0).status == "fail"
