"""Classical Jacobi polynomials and their matrix-valued repackaging.

The constant matrix U = (1/sqrt 2)[[1, -1], [1, 1]] only ever appears in
conjugations U X U^-1, so the unnormalized V = [[1, -1], [1, 1]] with
V^-1 = (1/2)[[1, 1], [-1, 1]] is used throughout and all arithmetic stays
rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DecompositionMismatch
from .laurent import LaurentPoly, PolyX
from .multiplicity import Multiplicity, parse_number
from .nonsym import gram_schmidt_E
from .transport import PolyMat2, const_inverse, const_matmul
from .vector import build_M, dk_x_apply, lambda_of, leading_matrix
from .verdict import OperatorVerdict, combine, from_residual

HALF = Fraction(1, 2)
U_MAT = ((Fraction(1), Fraction(-1)), (Fraction(1), Fraction(1)))
U_INV = ((HALF, HALF), (-HALF, HALF))


@dataclass(frozen=True)
class JacobiParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(parse_number(self.alpha)))
        object.__setattr__(self, "beta", Fraction(parse_number(self.beta)))

    @classmethod
    def from_multiplicity(cls, k: Multiplicity):
        return cls(k.k1 + k.k2 - HALF, k.k2 - HALF)

    def to_multiplicity(self) -> Multiplicity:
        return Multiplicity(self.alpha - self.beta, self.beta + HALF)


def pochhammer(a, n: int):
    out = Fraction(1) if isinstance(a, Fraction) else 1
    for i in range(n):
        out *= a + i
    return out


def jacobi_poly(alpha, beta, n: int) -> PolyX:
    """P_n^(alpha, beta) from the three-term recurrence."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a, b = Fraction(alpha), Fraction(beta)
    x = PolyX.x()
    prev, cur = PolyX.constant(1), x * ((a + b + 2) / 2) + (a - b) / 2
    if n == 0:
        return prev
    for m in range(2, n + 1):
        t = 2 * m + a + b
        c0 = 2 * m * (m + a + b) * (t - 2)
        c1 = (t - 1) * (t * (t - 2))
        c2 = (t - 1) * (a * a - b * b)
        c3 = 2 * (m + a - 1) * (m + b - 1) * t
        prev, cur = cur, (x * cur * c1 + cur * c2 - prev * c3) / c0
    return cur


def jacobi_poly_hypergeometric(alpha, beta, n: int) -> PolyX:
    """P_n^(alpha, beta) = (alpha+1)_n / n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)."""
    a, b = Fraction(alpha), Fraction(beta)
    u = PolyX({0: HALF, 1: -HALF})
    total = PolyX()
    term_pow = PolyX.constant(1)
    for j in range(n + 1):
        coef = pochhammer(Fraction(-n), j) * pochhammer(n + a + b + 1, j) / (
            pochhammer(a + 1, j) * factorial(j)
        )
        total = total + term_pow * coef
        term_pow = term_pow * u
    return total * (pochhammer(a + 1, n) / factorial(n))


def jacobi_leading_coefficient(alpha, beta, n: int):
    """(n + alpha + beta + 1)_n / (2^n n!)."""
    return pochhammer(n + Fraction(alpha) + Fraction(beta) + 1, n) / (2**n * factorial(n))


def naive_N_leading_coefficient(params: JacobiParams, N: int):
    """(1/2)^N (alpha+beta+1)_N / N!, the normalization that disagrees with the true leading coefficient."""
    return pochhammer(params.alpha + params.beta + 1, N) / (2**N * factorial(N))


def build_N_family(params: JacobiParams, N: int) -> PolyMat2:
    """diag(P_N^(alpha+1, beta), P_N^(alpha, beta+1))."""
    a, b = params.alpha, params.beta
    return PolyMat2([[jacobi_poly(a + 1, b, N), 0], [0, jacobi_poly(a, b + 1, N)]])


def conj_U(A):
    """U A U^-1 for a PolyMat2 or a constant matrix."""
    if isinstance(A, PolyMat2):
        return PolyMat2(U_MAT) @ A @ PolyMat2(U_INV)
    return const_matmul(const_matmul(U_MAT, A), U_INV)


def conj_U_inv(A):
    if isinstance(A, PolyMat2):
        return PolyMat2(U_INV) @ A @ PolyMat2(U_MAT)
    return const_matmul(const_matmul(U_INV, A), U_MAT)


def weight_matrix() -> PolyMat2:
    x = PolyX.x()
    return PolyMat2([[2, x * 2], [x * 2, 2]])


def weight_diagonalization_check() -> OperatorVerdict:
    """U W U^T = 2 diag(1 - x, 1 + x); U^T = U^-1 for the normalized U."""
    x = PolyX.x()
    # normalized U W U^T equals (1/2) V W V^T
    lhs = PolyMat2(U_MAT) @ weight_matrix() @ PolyMat2(((1, 1), (-1, 1))) * HALF
    rhs = PolyMat2([[(1 - x) * 2, 0], [0, (1 + x) * 2]])
    return from_residual("weight-diagonalization", (lhs - rhs).max_abs())


def monic_from_M(k: Multiplicity, N: int) -> PolyMat2:
    """U M(N, k) C_N(k)^-1 U^-1."""
    M = build_M(k, N)
    Cinv = const_inverse(leading_matrix(k, N))
    return conj_U(M @ PolyMat2(Cinv))


def monic_from_N(params: JacobiParams, N: int) -> PolyMat2:
    """N(N, (alpha, beta)) normalized to identity leading coefficient."""
    Nm = build_N_family(params, N)
    return PolyMat2([
        [Nm[0, 0] / Nm[0, 0].leading_coeff(), 0],
        [0, Nm[1, 1] / Nm[1, 1].leading_coeff()],
    ])


def monic_uniqueness_check(k: Multiplicity, bound: int = 6) -> OperatorVerdict:
    params = JacobiParams.from_multiplicity(k)
    parts = []
    for N in range(bound + 1):
        A = monic_from_M(k, N)
        B = monic_from_N(params, N)
        lead = A.leading_coefficient()
        monic = lead == ((1, 0), (0, 1)) and A.degree() == N
        parts.append(from_residual(f"N={N}", (A - B).max_abs() + (0 if monic else 1)))
    return combine(f"monic-uniqueness k={k.label()} N<={bound}", parts)


@dataclass(frozen=True)
class Decomposition:
    """E(-N) and E(N+1) written through P+ = P_N^(a+1,b), P- = P_N^(a,b+1).

    ``prefactor`` is fixed by monicity of E(-N); ``factorial_prefactor`` is
    N!/(alpha+beta+1)_N for comparison, and ``closed_form_prefactor`` is
    2^(2N-1) N! / (N+alpha+beta+2)_N, which follows from the true leading
    coefficient of the Jacobi polynomials.
    """

    N: int
    k: Multiplicity
    prefactor: Fraction
    factorial_prefactor: Fraction
    closed_form_prefactor: Fraction
    c_N: Fraction
    E_minus: LaurentPoly
    E_plus: LaurentPoly
    flipped_E_plus_matches: bool

    @property
    def prefactor_is_factorial_ratio(self):
        return self.prefactor == self.factorial_prefactor


def _zx(poly: PolyX) -> LaurentPoly:
    return poly.to_laurent()


def decompose_E(k: Multiplicity, N: int) -> Decomposition:
    """Rebuild E(-N, k) and E(N+1, k) from classical Jacobi polynomials.

    With A = P+, B = P- and s the monic prefactor,

        E(-N)  = s (A + B - z (A - B))
        E(N+1) = s (z (A + B - c_N (A - B)) + c_N (A + B) - (A - B)).

    The second line is what the columns of U^-1 N C_N U give; raises
    DecompositionMismatch if either reconstruction disagrees with
    Gram-Schmidt.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    k.require_exact("decompose_E")
    params = JacobiParams.from_multiplicity(k)
    a, b = params.alpha, params.beta
    A = _zx(jacobi_poly(a + 1, b, N))
    B = _zx(jacobi_poly(a, b + 1, N))
    z = LaurentPoly.z()
    c_N = k.k1 / (1 + 2 * N + 2 * k.rho)
    S, D = A + B, A - B

    core_minus = S - z * D
    lead = core_minus[-N]
    if lead == 0:
        raise DecompositionMismatch(f"no z^-{N} term to normalize")
    s = 1 / lead
    E_minus = core_minus.scale(s)
    E_plus = (z * (S - D.scale(c_N)) + S.scale(c_N) - D).scale(s)

    gs_minus, gs_plus = gram_schmidt_E(k, -N), gram_schmidt_E(k, N + 1)
    if E_minus != gs_minus:
        raise DecompositionMismatch(f"E(-{N}) reconstruction differs")
    if E_plus != gs_plus:
        raise DecompositionMismatch(f"E({N + 1}) reconstruction differs")

    by_factorials = Fraction(factorial(N)) / pochhammer(a + b + 1, N)
    closed = Fraction(2) ** (2 * N - 1) * factorial(N) / pochhammer(N + a + b + 2, N)
    # the same line with the signs of the c_N terms flipped, under any scalar
    flipped = z * (S + D.scale(c_N)) - (S.scale(c_N) - D)
    top = flipped[N + 1]
    flipped_ok = top != 0 and flipped.scale(1 / top) == gs_plus
    return Decomposition(N, k, s, by_factorials, closed, c_N, E_minus, E_plus, flipped_ok)


def decomposition_check(k: Multiplicity, bound: int = 6) -> OperatorVerdict:
    parts = []
    factorial_mismatch = []
    for N in range(bound + 1):
        try:
            d = decompose_E(k, N)
        except DecompositionMismatch as exc:
            parts.append(OperatorVerdict(f"N={N}", "fail", 1.0, str(exc)))
            continue
        parts.append(from_residual(f"N={N} closed form", abs(d.prefactor - d.closed_form_prefactor)))
        if not d.prefactor_is_factorial_ratio:
            factorial_mismatch.append(f"N={N}: monic {d.prefactor} vs N!/(a+b+1)_N {d.factorial_prefactor}")
    detail = "; ".join(factorial_mismatch)
    return combine(f"E-decomposition k={k.label()} N<={bound}", parts, detail)


# --- the conjugated operator and the shift identities ---

def frak_D_first_order(params: JacobiParams) -> PolyMat2:
    x = PolyX.x()
    return PolyMat2([[0, -(1 + x)], [1 - x, 0]])


def frak_D_zeroth_order(params: JacobiParams):
    a, b = params.alpha, params.beta
    return ((HALF * (b - a + 1), -1 - b), (-1 - a, HALF * (a - b + 1)))


def frak_D_apply(params: JacobiParams, A: PolyMat2) -> PolyMat2:
    return frak_D_first_order(params) @ A.derivative() + PolyMat2(frak_D_zeroth_order(params)) @ A


def frak_L(params: JacobiParams, N: int):
    a, b = params.alpha, params.beta
    return (
        (HALF * (b - a + 1), -b - N - 1),
        (-a - N - 1, HALF * (a - b + 1)),
    )


def frak_L_from_conjugation(k: Multiplicity, N: int):
    """U C_N Lambda C_N^-1 U^-1."""
    C = leading_matrix(k, N)
    inner = const_matmul(const_matmul(C, lambda_of(k, N)), const_inverse(C))
    return conj_U(inner)


def frak_D_check(params: JacobiParams, N: int) -> OperatorVerdict:
    Nm = build_N_family(params, N)
    res = (frak_D_apply(params, Nm) - Nm @ PolyMat2(frak_L(params, N))).max_abs()
    return from_residual(f"frakD N = N frakL N={N} (a,b)=({params.alpha},{params.beta})", res)


def frak_D_conjugation_check(k: Multiplicity, degree: int = 4) -> OperatorVerdict:
    """frak_D = U D_k U^-1 on a spanning set, and frak_L = U C Lambda C^-1 U^-1."""
    params = JacobiParams.from_multiplicity(k)
    parts = []
    for A in spanning_set(degree):
        lhs = frak_D_apply(params, A)
        rhs = conj_U(dk_x_apply(k, conj_U_inv(A)))
        parts.append(from_residual("op", (lhs - rhs).max_abs()))
    for N in range(degree + 1):
        L1, L2 = frak_L(params, N), frak_L_from_conjugation(k, N)
        parts.append(from_residual(f"L N={N}", max(abs(L1[i][j] - L2[i][j]) for i in range(2) for j in range(2))))
    return combine(f"frakD-conjugation k={k.label()}", parts)


def shift_check(params: JacobiParams, N: int) -> OperatorVerdict:
    """((x+1)d + b+1) P^(a,b+1) = (b+1+N) P^(a+1,b) and ((x-1)d + a+1) P^(a+1,b) = (a+1+N) P^(a,b+1)."""
    a, b = params.alpha, params.beta
    x = PolyX.x()
    Pm = jacobi_poly(a, b + 1, N)
    Pp = jacobi_poly(a + 1, b, N)
    r1 = (x + 1) * Pm.derivative() + Pm * (b + 1) - Pp * (b + 1 + N)
    r2 = (x - 1) * Pp.derivative() + Pp * (a + 1) - Pm * (a + 1 + N)
    return from_residual(
        f"shift N={N} (a,b)=({a},{b})", max(r1.max_abs(), r2.max_abs())
    )


def spanning_set(degree: int):
    """Matrix units times x^d for d <= degree."""
    out = []
    for d in range(degree + 1):
        for i in range(2):
            for j in range(2):
                rows = [[0, 0], [0, 0]]
                rows[i][j] = PolyX.x(d)
                out.append(PolyMat2(rows))
    return out


def transmute_check(k: Multiplicity, tests=None, degree: int = 8) -> OperatorVerdict:
    """D_{k'} d/dx = d/dx D_k with k' = (k1, k2 + 1)."""
    kp = k.with_k2(k.k2 + 1)
    tests = spanning_set(degree) if tests is None else tests
    worst = Fraction(0)
    for A in tests:
        lhs = dk_x_apply(kp, A.derivative())
        rhs = dk_x_apply(k, A).derivative()
        worst = max(worst, (lhs - rhs).max_abs())
    return from_residual(f"transmutation k={k.label()} -> {kp.label()}", worst, cases=len(tests))


def dk_squared_apply(k: Multiplicity, A: PolyMat2, shift=Fraction(0)) -> PolyMat2:
    """(D_k - shift)^2 A."""
    B = dk_x_apply(k, A) - A * shift
    return dk_x_apply(k, B) - B * shift


def square_diagonalization_check(k: Multiplicity, degree: int = 6, shift=HALF) -> OperatorVerdict:
    """U (D_k - shift)^2 U^-1 maps diagonal matrix polynomials to diagonal ones.

    Only the centred square (shift = 1/2, where the two eigenvalue branches
    -N-rho and N+1+rho become +-(N+rho+1/2)) decouples; the plain square
    (shift = 0) keeps the shift operators as off-diagonal terms.
    """
    worst = Fraction(0)
    for d in range(degree + 1):
        for i in range(2):
            rows = [[0, 0], [0, 0]]
            rows[i][i] = PolyX.x(d)
            A = PolyMat2(rows)
            img = conj_U(dk_squared_apply(k, conj_U_inv(A), shift))
            worst = max(worst, img[0, 1].max_abs(), img[1, 0].max_abs())
    return from_residual(f"square-diagonalization k={k.label()} shift={shift}", worst)
