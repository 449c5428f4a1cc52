"""Spin spherical functions on the torus and their link to the doubled root system.

R_m acts on C^2-valued functions with odd exponents (the module spanned by
(z, 1/z) and (1/z, z) over symmetric polynomials in z^2); multiplying by
diag(z, 1/z) moves that module onto invariant vectors with even exponents,
where the conjugated operator Q_m lives.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .laurent import LaurentPoly, RationalFunction
from .multiplicity import Multiplicity
from .nonsym import eigenvalue, gram_schmidt_E
from .transport import VecLaurent2, gamma
from .vector import MatrixDiffOp, gamma_star_apply
from .verdict import OperatorVerdict, combine, from_residual

R = "R"
Q = "Q"

_Z = LaurentPoly.z
_DIFF2 = LaurentPoly({2: 1, -2: -1})      # z^2 - z^-2
_SUM2 = LaurentPoly({2: 1, -2: 1})        # z^2 + z^-2


@dataclass(frozen=True)
class SphericalOp:
    m: int
    kind: str = R

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise ValueError("m must be a positive integer")
        if self.kind not in (R, Q):
            raise ValueError("kind must be 'R' or 'Q'")

    def operator(self) -> MatrixDiffOp:
        m = self.m
        diag = RationalFunction(_SUM2 * (2 * m), _DIFF2)
        if self.kind == R:
            off12 = RationalFunction(LaurentPoly.constant(-4 * m), _DIFF2)
            off21 = RationalFunction(LaurentPoly.constant(4 * m), _DIFF2)
            return MatrixDiffOp((1, -1), ((diag, off12), (off21, -diag)))
        off12 = RationalFunction(_Z(2) * (-4 * m), _DIFF2)
        off21 = RationalFunction(_Z(-2) * (4 * m), _DIFF2)
        return MatrixDiffOp((1, -1), ((diag - 1, off12), (off21, -diag - 1)))


def _check_domain(op: SphericalOp, F: VecLaurent2):
    parity = 1 if op.kind == R else 0
    if not (F.comp1.exponents_have_parity(parity) and F.comp2.exponents_have_parity(parity)):
        raise DomainError(f"{op.kind}_m expects {'odd' if parity else 'even'} exponents")
    if not F.is_invariant():
        raise DomainError("components must be exchanged by z -> 1/z")


def spherical_apply(op: SphericalOp, F: VecLaurent2) -> VecLaurent2:
    _check_domain(op, F)
    return op.operator().apply(F)


def ea_transport(F: VecLaurent2, direction: str) -> VecLaurent2:
    """``fromEA`` multiplies by diag(z, 1/z); ``toEA`` by diag(1/z, z)."""
    if direction == "fromEA":
        if not (F.comp1.exponents_have_parity(1) and F.comp2.exponents_have_parity(1)):
            raise DomainError("fromEA expects odd exponents")
        return F.diag_mul(_Z(1), _Z(-1))
    if direction == "toEA":
        if not (F.comp1.exponents_have_parity(0) and F.comp2.exponents_have_parity(0)):
            raise DomainError("toEA expects even exponents")
        return F.diag_mul(_Z(-1), _Z(1))
    raise ValueError("direction must be 'toEA' or 'fromEA'")


def doubled_multiplicity(m: int) -> Multiplicity:
    return Multiplicity(0, m, scale=2)


def spherical_function(m: int, n: int) -> VecLaurent2:
    """The R_m-eigenfunction carried by E(n, (0, m)) on the doubled root system.

    n = l + 1 gives the branch through (z, 1/z), n = -l the branch through
    (1/z, z); normalization is the monic one of E.
    """
    E = gram_schmidt_E(doubled_multiplicity(m), n)
    return ea_transport(gamma(E), "toEA")


def spherical_eigenvalue(m: int, n: int):
    """Eigenvalue of R_m on :func:`spherical_function` (Cherednik value minus one)."""
    return eigenvalue(doubled_multiplicity(m), n) - 1


def _res(a: VecLaurent2, b: VecLaurent2):
    return (a - b).max_abs()


def fundamental_eigen_check(m: int) -> OperatorVerdict:
    """(z, 1/z) and (1/z, z) are R_m-eigenvectors for +(2m+1) and -(2m+1)."""
    op = SphericalOp(m, R)
    plus = VecLaurent2(_Z(1), _Z(-1))
    minus = VecLaurent2(_Z(-1), _Z(1))
    parts = [
        from_residual("plus", _res(spherical_apply(op, plus), plus * (2 * m + 1))),
        from_residual("minus", _res(spherical_apply(op, minus), minus * (-(2 * m + 1)))),
    ]
    return combine(f"fundamental spherical eigenvalues m={m}", parts)


def identification_check(m: int, degree: int = 10) -> OperatorVerdict:
    """Q_m + I equals the transported Cherednik operator for (0, m) at scale 2.

    Also checks Q_m = fromEA o R_m o toEA and that the spherical functions
    built from E(n, (0, m)) are R_m-eigenfunctions, all on Gamma(z^2j),
    |j| <= degree.
    """
    k = doubled_multiplicity(m)
    q_op, r_op = SphericalOp(m, Q), SphericalOp(m, R)
    parts = []
    for j in range(-degree, degree + 1):
        F = gamma(_Z(2 * j))
        QF = spherical_apply(q_op, F)
        parts.append(from_residual(f"Q+I j={j}", _res(QF + F, gamma_star_apply(k, F))))
        conj = ea_transport(spherical_apply(r_op, ea_transport(F, "toEA")), "fromEA")
        parts.append(from_residual(f"conj j={j}", _res(QF, conj)))
    for n in range(-degree, degree + 1):
        Phi = spherical_function(m, n)
        lam = spherical_eigenvalue(m, n)
        parts.append(from_residual(f"eig n={n}", _res(spherical_apply(r_op, Phi), Phi * lam)))
    parts.append(fundamental_eigen_check(m))
    return combine(f"spherical identification m={m} degree<={degree}", parts)
