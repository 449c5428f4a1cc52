"""C^2-valued picture: P(n,k), the transported Cherednik operator, M(N,k)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInvariant
from .laurent import LaurentPoly, PolyX, RationalFunction
from .multiplicity import Multiplicity
from .nonsym import cherednik_apply, gram_schmidt_E
from .transport import PolyMat2, PolyVec2, VecLaurent2, const_matmul, gamma, phi_transport
from .verdict import OperatorVerdict, combine, from_residual


@dataclass(frozen=True)
class MatrixDiffOp:
    """diag(s1, s2) z d/dz + B(z), B a 2x2 matrix of rational functions.

    Each row is assembled as one rational function before the exact
    division, so the individual entries need not be Laurent polynomials.
    """

    signs: tuple
    b: tuple

    def apply(self, F: VecLaurent2) -> VecLaurent2:
        comps = (F.comp1, F.comp2)
        out = []
        for i in range(2):
            row = RationalFunction(comps[0]) * 0
            for j in range(2):
                row = row + self.b[i][j] * comps[j]
            out.append(comps[i].euler().scale(self.signs[i]) + row.to_laurent())
        return VecLaurent2(*out)

    def __add__(self, other):
        if self.signs != other.signs:
            raise ValueError("first-order parts differ")
        return MatrixDiffOp(
            self.signs,
            tuple(tuple(self.b[i][j] + other.b[i][j] for j in range(2)) for i in range(2)),
        )


def _rf(num, den_exps):
    """num / (1 - z**e) as a RationalFunction."""
    return RationalFunction(num, LaurentPoly({0: 1, den_exps: -1}))


def gamma_star_operator(k: Multiplicity, form: str = "first") -> MatrixDiffOp:
    """The Cherednik operator transported through p -> (p, s.p).

    ``form="first"`` keeps the four entries written with 1/(1 - z^-c) and
    1/(1 - z^c); ``form="second"`` rewrites the lower row with
    1/(1 - z^c) - 1 = -1/(1 - z^-c) so every entry shares one coefficient.
    """
    c = k.scale
    rho = k.rho
    a_minus = _rf(c * k.k1, -c) + _rf(2 * c * k.k2, -2 * c)
    if form == "first":
        a_plus = _rf(c * k.k1, c) + _rf(2 * c * k.k2, 2 * c)
        b = ((a_minus - rho, -a_minus), (-a_plus, a_plus - rho))
    elif form == "second":
        b = ((a_minus - rho, -a_minus), (a_minus - 2 * rho, -a_minus + rho))
    else:
        raise ValueError("form must be 'first' or 'second'")
    return MatrixDiffOp((1, -1), b)


def build_P(k: Multiplicity, n: int) -> VecLaurent2:
    return gamma(gram_schmidt_E(k, n))


def gamma_star_apply(k: Multiplicity, P: VecLaurent2, form: str = "first") -> VecLaurent2:
    if not P.is_invariant():
        raise NotInvariant("the transported operator acts on invariant vectors")
    return gamma_star_operator(k, form).apply(P)


def calP(k: Multiplicity, n: int) -> PolyVec2:
    """The x-picture vector polynomial Phi^-1 P(n, k)."""
    return phi_transport(build_P(k, n))


def build_M(k: Multiplicity, N: int) -> PolyMat2:
    """Columns calP(-N, k) and calP(N+1, k)."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    k.require_exact("build_M")
    return PolyMat2.from_columns(calP(k, -N), calP(k, N + 1))


def leading_matrix(k: Multiplicity, N: int):
    """C_N(k) = 2^N [[1, k1/(1 + 2N + 2 rho)], [0, 1]]."""
    c = k.k1 / (1 + 2 * N + 2 * k.rho)
    s = Fraction(2) ** N
    return ((s, s * c), (Fraction(0), s))


def lambda_of(k: Multiplicity, N: int):
    rho = k.rho
    return ((-N - rho, Fraction(0)), (Fraction(0), N + 1 + rho))


def dk_x_first_order(k: Multiplicity):
    x = PolyX.x()
    return PolyMat2([[-x, -1], [1, x]])


def dk_x_zeroth_order(k: Multiplicity):
    return ((-k.rho, k.k1), (Fraction(0), 1 + k.rho))


def dk_x_apply(k: Multiplicity, A: PolyMat2) -> PolyMat2:
    """[[-x, -1], [1, x]] d/dx A + [[-rho, k1], [0, 1 + rho]] A."""
    return dk_x_first_order(k) @ A.derivative() + PolyMat2(dk_x_zeroth_order(k)) @ A


def _max_abs(v):
    return v.max_abs()


def transport_square_check(k: Multiplicity, p: LaurentPoly, form="first") -> OperatorVerdict:
    lhs = gamma_star_apply(k, gamma(p), form)
    rhs = gamma(cherednik_apply(k, p))
    return from_residual(f"transport-square k={k.label()}", _max_abs(lhs - rhs))


def form_equivalence_check(k: Multiplicity, bound: int = 10) -> OperatorVerdict:
    """Both displayed forms act identically on Gamma(z^j), |j| <= bound."""
    first = gamma_star_operator(k, "first")
    second = gamma_star_operator(k, "second")
    parts = []
    for j in range(-bound, bound + 1):
        F = gamma(LaurentPoly.z(j * k.scale))
        parts.append(from_residual(f"j={j}", _max_abs(first.apply(F) - second.apply(F))))
    return combine(f"gamma-star-form-equivalence k={k.label()} |j|<={bound}", parts)


def example_check(k: Multiplicity) -> OperatorVerdict:
    """P(0) = (1, 1), P(1) = (z + c, 1/z + c) with eigenvalues -rho and 1 + rho."""
    c = k.k1 / (1 + 2 * k.rho)
    P0, P1 = build_P(k, 0), build_P(k, 1)
    want0 = VecLaurent2(LaurentPoly.constant(1), LaurentPoly.constant(1))
    want1 = VecLaurent2(LaurentPoly({1: 1, 0: c}), LaurentPoly({-1: 1, 0: c}))
    parts = [
        from_residual("P(0)", _max_abs(P0 - want0)),
        from_residual("P(1)", _max_abs(P1 - want1)),
    ]
    for form in ("first", "second"):
        parts.append(from_residual(
            f"eig P(0) {form}", _max_abs(gamma_star_apply(k, P0, form) - P0 * (-k.rho))))
        parts.append(from_residual(
            f"eig P(1) {form}", _max_abs(gamma_star_apply(k, P1, form) - P1 * (1 + k.rho))))
    return combine(f"P(0),P(1) example k={k.label()}", parts)


def matrix_family_check(k: Multiplicity, bound: int = 6) -> OperatorVerdict:
    """Leading coefficient, matrix orthogonality and D_k M = M Lambda for N <= bound."""
    from .pairing import engine, mat_pair

    eng = engine(k)
    Ms = [build_M(k, N) for N in range(bound + 1)]
    parts = []
    for N, M in enumerate(Ms):
        lead = M.leading_coefficient()
        C = leading_matrix(k, N)
        parts.append(from_residual(
            f"C_N N={N}",
            max(abs(lead[i][j] - C[i][j]) for i in range(2) for j in range(2))
            + (0 if M.degree() == N else 1),
        ))
        lhs = dk_x_apply(k, M)
        rhs = M @ PolyMat2(lambda_of(k, N))
        parts.append(from_residual(f"D M = M Lambda N={N}", (lhs - rhs).max_abs()))
    for N in range(bound + 1):
        for K in range(N, bound + 1):
            G = mat_pair(eng, Ms[N], Ms[K])
            if N == K:
                res = abs(G[0][1]) + abs(G[1][0])
                pos = G[0][0] > 0 and G[1][1] > 0
                parts.append(from_residual(f"diag pair N={N}", res + (0 if pos else 1)))
            else:
                res = max(abs(G[i][j]) for i in range(2) for j in range(2))
                parts.append(from_residual(f"pair N={N},M={K}", res))
    return combine(f"matrix family k={k.label()} N<={bound}", parts)
