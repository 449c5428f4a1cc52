"""Vector and matrix containers plus the maps between the three pictures.

* scalar Laurent polynomials p(z),
* S2-invariant C^2-valued Laurent polynomials (p(z), p(1/z)),
* C^2-valued polynomials in x = (z + 1/z)/2 (the Steinberg splitting).
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInvariant
from .laurent import LaurentPoly, PolyX

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class VecLaurent2:
    comp1: LaurentPoly
    comp2: LaurentPoly

    def __iter__(self):
        yield self.comp1
        yield self.comp2

    def __add__(self, other):
        return VecLaurent2(self.comp1 + other.comp1, self.comp2 + other.comp2)

    def __sub__(self, other):
        return VecLaurent2(self.comp1 - other.comp1, self.comp2 - other.comp2)

    def __neg__(self):
        return VecLaurent2(-self.comp1, -self.comp2)

    def __mul__(self, f):
        # scalar or LaurentPoly multiplier acting componentwise
        if isinstance(f, (numbers.Number, LaurentPoly)):
            return VecLaurent2(self.comp1 * f, self.comp2 * f)
        return NotImplemented

    __rmul__ = __mul__

    def is_invariant(self) -> bool:
        return self.comp2 == self.comp1.involve()

    def max_abs(self):
        return max(self.comp1.max_abs(), self.comp2.max_abs())

    def diag_mul(self, a: LaurentPoly, b: LaurentPoly):
        """Pointwise product with diag(a, b)."""
        return VecLaurent2(a * self.comp1, b * self.comp2)


@dataclass(frozen=True)
class PolyVec2:
    f1: PolyX
    f2: PolyX

    def __iter__(self):
        yield self.f1
        yield self.f2

    def __add__(self, other):
        return PolyVec2(self.f1 + other.f1, self.f2 + other.f2)

    def __sub__(self, other):
        return PolyVec2(self.f1 - other.f1, self.f2 - other.f2)

    def __mul__(self, a):
        return PolyVec2(self.f1 * a, self.f2 * a)

    __rmul__ = __mul__


class PolyMat2:
    """2x2 matrix with PolyX entries; ``rows[i][j]``."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(
            tuple(e if isinstance(e, PolyX) else PolyX.constant(e) for e in row) for row in rows
        )
        if len(self.rows) != 2 or any(len(r) != 2 for r in self.rows):
            raise ValueError("PolyMat2 needs a 2x2 layout")

    @classmethod
    def from_columns(cls, c1: PolyVec2, c2: PolyVec2):
        return cls([[c1.f1, c2.f1], [c1.f2, c2.f2]])

    @classmethod
    def identity(cls):
        return cls([[1, 0], [0, 1]])

    @classmethod
    def zero(cls):
        return cls([[0, 0], [0, 0]])

    def column(self, j) -> PolyVec2:
        return PolyVec2(self.rows[0][j], self.rows[1][j])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return [e for row in self.rows for e in row]

    def __eq__(self, other):
        if not isinstance(other, PolyMat2):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        return PolyMat2([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return PolyMat2([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return PolyMat2([[-a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if not isinstance(other, PolyMat2):
            other = PolyMat2(other)
        a, b = self.rows, other.rows
        return PolyMat2(
            [[a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)] for i in range(2)]
        )

    def __rmatmul__(self, other):
        return PolyMat2(other) @ self

    def __mul__(self, s):
        if isinstance(s, (numbers.Number, PolyX)):
            return PolyMat2([[e * s for e in r] for r in self.rows])
        return NotImplemented

    __rmul__ = __mul__

    def derivative(self):
        return PolyMat2([[e.derivative() for e in r] for r in self.rows])

    def degree(self):
        return max(e.degree() for e in self.entries())

    def coefficient(self, d):
        """Constant matrix of x**d coefficients, as nested tuples."""
        return tuple(tuple(e[d] for e in r) for r in self.rows)

    def leading_coefficient(self):
        return self.coefficient(self.degree())

    def max_abs(self):
        return max(e.max_abs() for e in self.entries())

    def is_zero(self):
        return all(e.is_zero() for e in self.entries())

    def is_diagonal(self):
        return self.rows[0][1].is_zero() and self.rows[1][0].is_zero()

    def __repr__(self):
        return f"PolyMat2({[list(r) for r in self.rows]!r})"


def const_matmul(a, b):
    """Product of two constant 2x2 matrices given as nested sequences."""
    return tuple(tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2))


def const_inverse(a):
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if det == 0:
        raise ZeroDivisionError("singular 2x2 matrix")
    return ((a[1][1] / det, -a[0][1] / det), (-a[1][0] / det, a[0][0] / det))


def gamma(p: LaurentPoly) -> VecLaurent2:
    """p -> (p, s.p)."""
    return VecLaurent2(p, p.involve())


def _order_key(e):
    # 1 < z < 1/z < z^2 < z^-2 < ...
    return 2 * e - 1 if e > 0 else -2 * e


def steinberg_split(p: LaurentPoly):
    """Unique (f1, f2) in Q[x]^2 with p = f1(x) + z f2(x), x = (z + 1/z)/2.

    The leading monomial (in the order 1 < z < 1/z < z^2 < ...) of x^j is
    z^-j and that of z x^j is z^(j+1); peeling leading monomials therefore
    solves the system triangularly.
    """
    f1, f2 = {}, {}
    rest = p
    x_powers = {}

    def xpow(j):
        if j not in x_powers:
            x_powers[j] = PolyX.x(j).to_laurent()
        return x_powers[j]

    zmono = LaurentPoly.z()
    while not rest.is_zero():
        lead = max(rest.support(), key=_order_key)
        c = rest[lead]
        if lead <= 0:
            j = -lead
            coef = c * 2**j
            f1[j] = coef
            rest = rest - xpow(j).scale(coef)
        else:
            j = lead - 1
            coef = c * 2**j
            f2[j] = coef
            rest = rest - (zmono * xpow(j)).scale(coef)
    return PolyX(f1), PolyX(f2)


def reassemble(f1: PolyX, f2: PolyX) -> LaurentPoly:
    """Inverse of :func:`steinberg_split`."""
    return f1.to_laurent() + LaurentPoly.z() * f2.to_laurent()


def upsilon(p: LaurentPoly) -> PolyVec2:
    return PolyVec2(*steinberg_split(p))


def phi_transport(P: VecLaurent2) -> PolyVec2:
    """Pointwise multiplication by Phi(z)^-1, Phi = [[1, z], [1, 1/z]]."""
    if not P.is_invariant():
        raise NotInvariant("phi_transport needs an S2-invariant vector")
    return upsilon(P.comp1)


def phi_inverse(v: PolyVec2) -> VecLaurent2:
    """Phi(z) v((z + 1/z)/2), an S2-invariant vector."""
    return gamma(reassemble(v.f1, v.f2))
