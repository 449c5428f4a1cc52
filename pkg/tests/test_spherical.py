import pytest
from hypothesis import given, settings, strategies as st

from bc1jacobi.errors import DomainError
from bc1jacobi.laurent import LaurentPoly as L
from bc1jacobi.spherical import (
    Q,
    R,
    SphericalOp,
    doubled_multiplicity,
    ea_transport,
    fundamental_eigen_check,
    identification_check,
    spherical_apply,
    spherical_eigenvalue,
    spherical_function,
)
from bc1jacobi.transport import VecLaurent2, gamma
from bc1jacobi.vector import gamma_star_apply

z, zi = L.z(), L.z(-1)
PLUS = VecLaurent2(z, zi)
MINUS = VecLaurent2(zi, z)


def test_m1_example():
    op = SphericalOp(1, R)
    assert spherical_apply(op, PLUS) == PLUS * 3
    assert spherical_apply(op, MINUS) == MINUS * -3


@pytest.mark.parametrize("m", range(1, 6))
def test_fundamental_eigenvalues(m):
    op = SphericalOp(m)
    assert spherical_apply(op, PLUS) == PLUS * (2 * m + 1)
    assert spherical_apply(op, MINUS) == MINUS * -(2 * m + 1)
    assert fundamental_eigen_check(m).status == "exact"


def test_op_validation():
    with pytest.raises(ValueError):
        SphericalOp(0)
    with pytest.raises(ValueError):
        SphericalOp(2, "S")


def test_domain_errors():
    with pytest.raises(DomainError):
        spherical_apply(SphericalOp(1, R), gamma(L.z(2)))
    with pytest.raises(DomainError):
        spherical_apply(SphericalOp(1, Q), PLUS)
    with pytest.raises(DomainError):
        spherical_apply(SphericalOp(1, R), VecLaurent2(z, z))


def test_ea_transport_examples():
    assert ea_transport(PLUS, "fromEA") == VecLaurent2(L.z(2), L.z(-2))
    assert ea_transport(MINUS, "fromEA") == VecLaurent2(L.constant(1), L.constant(1))
    one = VecLaurent2(L.constant(1), L.constant(1))
    assert ea_transport(one, "toEA") == MINUS
    assert ea_transport(ea_transport(PLUS, "fromEA"), "toEA") == PLUS
    with pytest.raises(DomainError):
        ea_transport(one, "fromEA")
    with pytest.raises(DomainError):
        ea_transport(PLUS, "toEA")
    with pytest.raises(ValueError):
        ea_transport(PLUS, "sideways")


@pytest.mark.parametrize("m", [1, 3])
def test_identification_small(m):
    assert identification_check(m, 4).status == "exact"


@pytest.mark.parametrize("m", range(1, 6))
def test_identification_full(m):
    assert identification_check(m, 10).status == "exact"


def test_fundamental_functions_from_nonsym():
    for m in range(1, 4):
        assert spherical_function(m, 1) == PLUS
        assert spherical_function(m, 0) == MINUS
        assert spherical_eigenvalue(m, 1) == 2 * m + 1
        assert spherical_eigenvalue(m, 0) == -(2 * m + 1)


def test_higher_spherical_functions():
    m = 2
    for n in range(-5, 6):
        Phi = spherical_function(m, n)
        lam = spherical_eigenvalue(m, n)
        assert spherical_apply(SphericalOp(m), Phi) == Phi * lam
        assert lam == (2 * (n + m) - 1 if n > 0 else 2 * (n - m) - 1)


def test_q_plus_identity_on_single_vector():
    k = doubled_multiplicity(2)
    F = gamma(L({4: 1, -2: 3}))
    assert spherical_apply(SphericalOp(2, Q), F) + F == gamma_star_apply(k, F)


sym_in_z2 = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=1, max_size=4).map(
    lambda cs: sum((L({2 * j: c, -2 * j: c}) if j else L.constant(c) for j, c in enumerate(cs)), L()))


@settings(max_examples=30, deadline=None)
@given(sym_in_z2, st.sampled_from([PLUS, MINUS]), st.integers(1, 4))
def test_module_structure(f, gen, m):
    # symmetric functions of z^2 act on the module and the transports are module maps
    F = gen * f
    assert ea_transport(F, "fromEA") == ea_transport(gen, "fromEA") * f
    lhs = spherical_apply(SphericalOp(m, Q), ea_transport(F, "fromEA"))
    rhs = ea_transport(spherical_apply(SphericalOp(m, R), F), "fromEA")
    assert lhs == rhs
