"""Inner products against the weight delta_k.

Exact engine: the pairing of p and q is the constant term of
``s(p) * q * delta_k``. Float engine: the same number obtained from
Gauss-Jacobi quadrature on [-1, 1], where the circle integral becomes

    CT(h delta_k) = 2**k2 / pi * int h_sym(x) (1-x)**(k1+k2-1/2) (1+x)**(k2-1/2) dx

and ``h_sym(cos t) = (h(e^it) + h(e^-it)) / 2``. Both drop the same overall
factor 2*pi, so norms are comparable between the engines.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ModeError, ParameterOutOfRange
from .laurent import LaurentPoly
from .multiplicity import Multiplicity
from .transport import PolyMat2, VecLaurent2, phi_inverse


def delta_expand(k: Multiplicity) -> LaurentPoly:
    """(1 - (z+1/z)/2)**k1 (1 - (z^2+z^-2)/2)**k2, with z -> z**scale."""
    if not k.exact:
        raise ModeError("delta_expand needs integer multiplicities")
    half = Fraction(1, 2)
    short = LaurentPoly({0: 1, 1: -half, -1: -half})
    long = LaurentPoly({0: 1, 2: -half, -2: -half})
    d = short ** int(k.k1) * long ** int(k.k2)
    return d.rescale(k.scale) if k.scale != 1 else d


@dataclass(frozen=True)
class QuadRule:
    nodes: np.ndarray
    weights: np.ndarray
    alpha_exp: float
    beta_exp: float

    def __len__(self):
        return len(self.nodes)

    def integrate(self, values):
        return float(np.dot(self.weights, values))


def jacobi_recurrence(a: float, b: float, n: int):
    """Diagonal and off-diagonal of the Jacobi matrix for (1-x)^a (1+x)^b.

    Returns (diag[0..n-1], offdiag[0..n-2]) of the symmetric tridiagonal
    matrix of the monic three-term recurrence, plus the zeroth moment.
    """
    ab = a + b
    diag = np.empty(n)
    off2 = np.empty(max(n - 1, 0))
    diag[0] = (b - a) / (ab + 2)
    for j in range(1, n):
        t = 2 * j + ab
        diag[j] = (b * b - a * a) / (t * (t + 2))
    for j in range(1, n):
        t = 2 * j + ab
        if j == 1:
            # (j+a+b)/(t-1) = 1 at j = 1; avoids 0/0 when a+b = -1
            off2[0] = 4 * (1 + a) * (1 + b) / ((2 + ab) ** 2 * (3 + ab))
        else:
            off2[j - 1] = 4 * j * (j + a) * (j + b) * (j + ab) / (t * t * (t + 1) * (t - 1))
    mu0 = math.exp(
        (ab + 1) * math.log(2) + math.lgamma(a + 1) + math.lgamma(b + 1) - math.lgamma(ab + 2)
    )
    return diag, np.sqrt(off2), mu0


@lru_cache(maxsize=256)
def gauss_jacobi_rule(alpha_exp: float, beta_exp: float, n: int) -> QuadRule:
    """n-point Gauss rule for the weight (1-x)**alpha_exp (1+x)**beta_exp (Golub-Welsch)."""
    alpha_exp, beta_exp = float(alpha_exp), float(beta_exp)
    if not (alpha_exp > -1 and beta_exp > -1):
        raise ParameterOutOfRange("Jacobi exponents must exceed -1")
    if n < 1:
        raise ParameterOutOfRange("need at least one node")
    diag, off, mu0 = jacobi_recurrence(alpha_exp, beta_exp, n)
    if n == 1:
        nodes, vecs = diag.copy(), np.ones((1, 1))
    else:
        nodes, vecs = eigh_tridiagonal(diag, off)
    weights = mu0 * vecs[0, :] ** 2
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadRule(nodes, weights, alpha_exp, beta_exp)


@dataclass(frozen=True)
class InnerProductEngine:
    multiplicity: Multiplicity
    delta: LaurentPoly | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.multiplicity.exact and self.delta is None:
            object.__setattr__(self, "delta", delta_expand(self.multiplicity))

    @property
    def exact(self):
        return self.multiplicity.exact

    @property
    def exponents(self):
        k = self.multiplicity
        return float(k.k1 + k.k2) - 0.5, float(k.k2) - 0.5

    def quad_rule(self, n):
        a, b = self.exponents
        return gauss_jacobi_rule(a, b, n)

    def pair(self, p: LaurentPoly, q: LaurentPoly):
        if self.exact and p.exact and q.exact:
            return ct_pair(self, p, q)
        return quad_pair(self, p, q)

    def vec_pair(self, P, Q):
        return vec_pair(self, P, Q)

    def mat_pair(self, A, B):
        return mat_pair(self, A, B)


def engine(k: Multiplicity) -> InnerProductEngine:
    return _engine(k)


@lru_cache(maxsize=64)
def _engine(k):
    return InnerProductEngine(k)


def ct_pair(eng: InnerProductEngine, p: LaurentPoly, q: LaurentPoly):
    """Constant term of s(p) q delta_k."""
    if not eng.exact:
        raise ModeError("ct_pair needs an exact engine")
    delta = eng.delta
    total = Fraction(0)
    for e1, v1 in p.items():
        for e2, v2 in q.items():
            # s(p) contributes z^-e1; need delta coefficient at e1 - e2
            d = delta._c.get(e1 - e2)
            if d is not None:
                total += v1 * v2 * d
    return total


def _symmetric_part_values(h: LaurentPoly, theta: np.ndarray) -> np.ndarray:
    # h_sym(cos t) = sum_e c_e cos(e t); evaluated directly for stability
    vals = np.zeros_like(theta)
    for e, c in h.items():
        vals += float(c) * np.cos(e * theta)
    return vals


def quad_pair(eng: InnerProductEngine, p: LaurentPoly, q: LaurentPoly, n: int | None = None):
    """Quadrature evaluation of the pairing, normalized to agree with ct_pair."""
    k = eng.multiplicity
    if k.scale != 1:
        raise ModeError("quad_pair is implemented for scale 1 only")
    h = p.involve() * q
    if h.is_zero():
        return 0.0
    if n is None:
        deg = max(abs(e) for e in h.support())
        n = math.ceil(deg / 2) + 2
    rule = eng.quad_rule(n)
    theta = np.arccos(np.clip(rule.nodes, -1.0, 1.0))
    integral = rule.integrate(_symmetric_part_values(h, theta))
    return 2.0 ** float(k.k2) / math.pi * integral


def vec_pair(eng: InnerProductEngine, P: VecLaurent2, Q: VecLaurent2):
    """(1/2)((P1, Q1) + (P2, Q2))."""
    a = eng.pair(P.comp1, Q.comp1)
    b = eng.pair(P.comp2, Q.comp2)
    return (a + b) / 2


def mat_pair(eng: InnerProductEngine, A: PolyMat2, B: PolyMat2):
    """Matrix-valued pairing; entry (i, j) pairs column i of A with column j of B.

    Columns are pulled back to invariant Laurent vectors through Phi, which
    is unitary between the two pictures.
    """
    acols = [phi_inverse(A.column(i)) for i in range(2)]
    bcols = [phi_inverse(B.column(j)) for j in range(2)]
    return tuple(tuple(vec_pair(eng, acols[i], bcols[j]) for j in range(2)) for i in range(2))


def mat_pair_quadrature(k: Multiplicity, A: PolyMat2, B: PolyMat2, n: int | None = None):
    """Direct quadrature of (1/2) int A^T W B w_k dx, normalized like ct_pair.

    Independent of the Laurent route; used to cross-check :func:`mat_pair`.
    """
    if n is None:
        n = (A.degree() + B.degree()) // 2 + 3
    a, b = float(k.k1 + k.k2) - 0.5, float(k.k2) - 0.5
    rule = gauss_jacobi_rule(a, b, n)
    x = rule.nodes
    Av = np.array([[_eval(e, x) for e in r] for r in A.rows])
    Bv = np.array([[_eval(e, x) for e in r] for r in B.rows])
    W = np.array([[np.full_like(x, 2.0), 2 * x], [2 * x, np.full_like(x, 2.0)]])
    # integrand[i, j](x) = sum_{r, s} A[r, i] W[r, s] B[s, j]
    integrand = np.einsum("rin,rsn,sjn->ijn", Av, W, Bv)
    # the circle covers [-1, 1] twice; with the 1/(2 pi) normalization this
    # leaves 2**k2 / (2 pi) in front of the Jacobi-weight integral
    vals = integrand @ rule.weights
    return 2.0 ** float(k.k2) / math.pi * vals / 2


def _eval(poly, x):
    out = np.zeros_like(x)
    for d in range(poly.degree(), -1, -1):
        out = out * x + float(poly[d])
    return out


def crosscheck(k1, k2, degree: int):
    """Compare ct_pair with quad_pair on all monomial pairs up to ``degree``.

    Returns (max relative deviation, per-pair worst case) where the deviation
    of a pair is |quad - exact| / (1 + |exact|).
    """
    exact = engine(Multiplicity(k1, k2))
    floating = engine(Multiplicity(k1, k2, mode="float"))
    worst, where = 0.0, None
    monos = {e: LaurentPoly.z(e) for e in range(-degree, degree + 1)}
    for e1, p in monos.items():
        for e2, q in monos.items():
            ref = ct_pair(exact, p, q)
            got = quad_pair(floating, p, q)
            dev = abs(got - float(ref)) / (1 + abs(float(ref)))
            if dev > worst:
                worst, where = dev, (e1, e2)
    return worst, where
