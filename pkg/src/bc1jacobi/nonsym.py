"""Nonsymmetric Jacobi polynomials E(n, k) and the Cherednik operator."""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .errors import DegenerateGram
from .laurent import LaurentPoly, reflect_divide
from .multiplicity import Multiplicity
from .pairing import engine
from .verdict import OperatorVerdict, from_residual

FLOAT_TOL = 1e-10


# --- monomial order 1 < z < 1/z < z^2 < z^-2 < ... ---

def order_rank(e: int) -> int:
    return 2 * e - 1 if e > 0 else -2 * e


def exponent_at(rank: int) -> int:
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    return (rank + 1) // 2 if rank % 2 else -(rank // 2)


def monomials_below(n: int):
    """Exponents of all monomials strictly below z**n, in increasing order."""
    return [exponent_at(r) for r in range(order_rank(n))]


def eigenvalue(k: Multiplicity, n: int):
    """Cherednik eigenvalue of E(n, k): n + rho for n > 0, n - rho for n <= 0.

    At scale c the exponent n stands for z**(c n), so the value is c times
    the unscaled one.
    """
    rho = k.rho_unscaled
    lam = n + rho if n > 0 else n - rho
    return k.scale * lam


def cherednik_apply(k: Multiplicity, p: LaurentPoly) -> LaurentPoly:
    """z d/dz + c k1 (1 - z^-c)^-1 (1 - s) + 2 c k2 (1 - z^-2c)^-1 (1 - s) - c rho."""
    c = k.scale
    out = p.euler() - p.scale(k.rho)
    if k.k1:
        out = out + reflect_divide(p, c).scale(c * k.k1)
    if k.k2:
        out = out + reflect_divide(p, 2 * c).scale(2 * c * k.k2)
    return out


class NonsymFamily:
    """Incremental Gram-Schmidt along the monomial order.

    In exact mode the pairing is the constant-term form; with a float
    multiplicity the quadrature engine is used and coefficients are floats.
    At scale c the basis is z**(c e) and the weight is delta_k(z**c).
    """

    def __init__(self, k: Multiplicity):
        self.multiplicity = k
        self._engine = engine(k)
        self._basis: list[LaurentPoly] = []
        self._norms: list = []
        self._lock = threading.Lock()

    def _fill(self, rank):
        c = self.multiplicity.scale
        while len(self._basis) <= rank:
            e = exponent_at(len(self._basis))
            mono = LaurentPoly.z(c * e)
            vec = mono
            for b, nb in zip(self._basis, self._norms):
                coef = self._engine.pair(b, mono) / nb
                if coef:
                    vec = vec - b.scale(coef)
            nrm = self._engine.pair(vec, vec)
            if nrm == 0 or (not isinstance(nrm, Fraction) and abs(nrm) < 1e-300):
                raise DegenerateGram(f"vanishing norm at exponent {e}")
            self._basis.append(vec)
            self._norms.append(nrm)

    def E(self, n: int) -> LaurentPoly:
        rank = order_rank(n)
        with self._lock:
            self._fill(rank)
            return self._basis[rank]

    def norm(self, n: int):
        rank = order_rank(n)
        with self._lock:
            self._fill(rank)
            return self._norms[rank]


@lru_cache(maxsize=64)
def family(k: Multiplicity) -> NonsymFamily:
    return NonsymFamily(k)


def gram_schmidt_E(k: Multiplicity, n: int) -> LaurentPoly:
    """E(n, k): monic in z**n, orthogonal to every lower monomial."""
    return family(k).E(n)


def eigen_E(k: Multiplicity, n: int) -> LaurentPoly:
    """E(n, k) as the monic eigenfunction of the Cherednik operator.

    The operator is triangular on the ordered monomial basis, so the
    eigenvector with top monomial z**n is found by back substitution. This
    never touches the inner product and serves as an independent check on
    :func:`gram_schmidt_E`.
    """
    c = k.scale
    top = order_rank(n)
    exps = [exponent_at(r) for r in range(top + 1)]
    images = {e: cherednik_apply(k, LaurentPoly.z(c * e)) for e in exps}
    lam = eigenvalue(k, n)
    coeffs = {n: Fraction(1) if k.exact else 1.0}
    for r in range(top - 1, -1, -1):
        e = exps[r]
        acc = sum(images[f][c * e] * coeffs[f] for f in exps[r + 1:] if f in coeffs)
        diag = images[e][c * e]
        coeffs[e] = -acc / (diag - lam)
    return LaurentPoly({c * e: v for e, v in coeffs.items()})


def _residual(p: LaurentPoly):
    return p.max_abs()


def eigen_check(k: Multiplicity, n: int) -> OperatorVerdict:
    E = gram_schmidt_E(k, n)
    lam = eigenvalue(k, n)
    res = _residual(cherednik_apply(k, E) - E.scale(lam))
    tol = None if k.exact else FLOAT_TOL * max(1.0, float(E.max_abs()))
    return from_residual(
        f"cherednik-eigenvalue k={k.label()} n={n}", res, tol, eigenvalue=lam
    )


def subleading_coefficient(k: Multiplicity, n: int):
    """k1 / (1 + 2n + 2 rho(k)) for the unscaled rho."""
    return k.k1 / (1 + 2 * n + 2 * k.rho_unscaled)


def subleading_check(k: Multiplicity, n: int) -> OperatorVerdict:
    """Coefficient of z^-n in E(n+1, k) against k1/(1 + 2n + 2 rho)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    E = gram_schmidt_E(k, n + 1)
    got = E[-n * k.scale]
    want = subleading_coefficient(k, n)
    tol = None if k.exact else FLOAT_TOL
    return from_residual(
        f"subleading-coefficient k={k.label()} n={n}", abs(got - want), tol, got=got, expected=want
    )


def orthogonality_check(k: Multiplicity, bound: int) -> OperatorVerdict:
    """Pairwise orthogonality of E(m), E(n) for |m|, |n| <= bound."""
    eng = engine(k)
    fam = family(k)
    ns = range(-bound, bound + 1)
    worst = Fraction(0) if k.exact else 0.0
    for i in ns:
        for j in ns:
            if i < j:
                worst = max(worst, abs(eng.pair(fam.E(i), fam.E(j))))
    tol = None if k.exact else FLOAT_TOL
    return from_residual(f"E-orthogonality k={k.label()} |n|<={bound}", worst, tol)
