"""Sparse Laurent polynomials in z and ordinary polynomials in x.

Coefficients are :class:`fractions.Fraction` whenever the inputs are exact
(ints are promoted); floats are carried through untouched so the same
classes serve the float-multiplicity code paths.
"""
from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NonDivisible

# relative size below which a floating remainder counts as zero
FLOAT_REMAINDER_TOL = 1e-11


def coerce(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, numbers.Integral):
        return Fraction(int(c))
    if isinstance(c, Fraction):
        return c
    if isinstance(c, numbers.Rational):
        return Fraction(c.numerator, c.denominator)
    if isinstance(c, numbers.Real):
        return float(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def is_exact(c) -> bool:
    return isinstance(c, Fraction)


class _Sparse:
    """Immutable finitely supported map exponent -> coefficient."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | Iterable | None = None):
        c = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for e, v in items:
                e = int(e)
                self._check_key(e)
                v = coerce(v)
                s = c.get(e, 0) + v
                if s == 0:
                    c.pop(e, None)
                else:
                    c[e] = s
        self._c = c
        self._hash = None

    @staticmethod
    def _check_key(e):
        pass

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        obj._c = {e: v for e, v in c.items() if v != 0}
        obj._hash = None
        return obj

    # --- container protocol ---
    def coeff(self, e):
        return self._c.get(e, Fraction(0))

    __getitem__ = coeff

    def items(self):
        return sorted(self._c.items())

    def support(self):
        return sorted(self._c)

    def to_dict(self):
        return dict(self._c)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self):
        return not self._c

    def max_abs(self):
        return max((abs(v) for v in self._c.values()), default=Fraction(0))

    @property
    def exact(self):
        return all(isinstance(v, Fraction) for v in self._c.values())

    def __eq__(self, other):
        if isinstance(other, numbers.Number):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._c.items())))
        return self._hash

    # --- ring operations ---
    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, e, c=1):
        return cls({e: c})

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, numbers.Number):
            return type(self).constant(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return type(self)._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, a):
        a = coerce(a)
        if a == 0:
            return type(self)()
        return type(self)._raw({e: a * v for e, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return type(self)._raw(c)

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, a):
        if isinstance(a, numbers.Number):
            a = coerce(a)
            return self.scale(1 / a)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = type(self).constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def map_coeffs(self, fn):
        return type(self)._raw({e: fn(v) for e, v in self._c.items()})

    def to_float(self):
        return self.map_coeffs(float)

    def __call__(self, z):
        return sum(v * z**e for e, v in self._c.items())

    # --- display ---
    _var = "z"

    def __repr__(self):
        if not self._c:
            return f"{type(self).__name__}(0)"
        terms = []
        for e, v in sorted(self._c.items(), reverse=True):
            if e == 0:
                terms.append(str(v))
            else:
                mono = self._var if e == 1 else f"{self._var}^{e}"
                terms.append(mono if v == 1 else f"{v}*{mono}")
        return f"{type(self).__name__}({' + '.join(terms)})"


class LaurentPoly(_Sparse):
    """Element of Q[z, 1/z]."""

    __slots__ = ()

    @classmethod
    def z(cls, e=1):
        return cls({e: 1})

    def min_exp(self):
        return min(self._c)

    def max_exp(self):
        return max(self._c)

    def involve(self):
        """The Weyl involution z -> 1/z."""
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    def rescale(self, c: int):
        """Substitute z -> z**c."""
        if c < 1:
            raise ValueError("rescale factor must be >= 1")
        return LaurentPoly._raw({c * e: v for e, v in self._c.items()})

    def euler(self):
        """z d/dz."""
        return LaurentPoly._raw({e: e * v for e, v in self._c.items()})

    def is_symmetric(self):
        return self == self.involve()

    def exponents_have_parity(self, parity: int):
        return all(e % 2 == parity for e in self._c)


class PolyX(_Sparse):
    """Element of Q[x]."""

    __slots__ = ()
    _var = "x"

    @staticmethod
    def _check_key(e):
        if e < 0:
            raise ValueError("PolyX degrees must be nonnegative")

    @classmethod
    def x(cls, d=1):
        return cls({d: 1})

    def degree(self):
        return max(self._c, default=-1)

    def leading_coeff(self):
        return self._c[self.degree()] if self._c else Fraction(0)

    def derivative(self):
        return PolyX._raw({d - 1: d * v for d, v in self._c.items() if d > 0})

    def to_laurent(self):
        """Substitute x = (z + 1/z)/2."""
        half = LaurentPoly({1: Fraction(1, 2), -1: Fraction(1, 2)})
        out = LaurentPoly()
        power = LaurentPoly.constant(1)
        for d in range(self.degree() + 1):
            if d:
                power = power * half
            v = self._c.get(d)
            if v is not None:
                out = out + power.scale(v)
        return out

    def __call__(self, x):
        out = 0
        for d in range(self.degree(), -1, -1):
            out = out * x + self._c.get(d, 0)
        return out


def arith(p: LaurentPoly, q, op: str):
    """Dispatch helper: ``op`` in add, sub, mul, scale (q a scalar for scale)."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown op {op!r}")


def involve(p: LaurentPoly) -> LaurentPoly:
    return p.involve()


def rescale(p: LaurentPoly, c: int) -> LaurentPoly:
    return p.rescale(c)


def _negligible(rem: LaurentPoly, scale) -> bool:
    if rem.exact:
        return rem.is_zero()
    return float(rem.max_abs()) <= FLOAT_REMAINDER_TOL * max(1.0, float(scale))


def divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return q with den * q == num, or raise NonDivisible."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if num.is_zero():
        return LaurentPoly()
    scale = num.max_abs()
    dtop, dbot = den.max_exp(), den.min_exp()
    lc = den[dtop]
    lowest_allowed = num.min_exp() - dbot
    rem = dict(num._c)
    q = {}
    while rem:
        top = max(rem)
        e = top - dtop
        if e < lowest_allowed:
            break
        c = rem[top] / lc
        q[e] = c
        for de, dv in den._c.items():
            k = de + e
            v = rem.get(k, 0) - c * dv
            if v == 0 or k == top:
                rem.pop(k, None)
            else:
                rem[k] = v
    remainder = LaurentPoly._raw(rem)
    if not _negligible(remainder, scale):
        raise NonDivisible(f"remainder {remainder!r} dividing by {den!r}")
    return LaurentPoly._raw(q)


_REFLECT_DENOMS = {}


def _one_minus_zinv(c):
    d = _REFLECT_DENOMS.get(c)
    if d is None:
        d = _REFLECT_DENOMS[c] = LaurentPoly({0: 1, -c: -1})
    return d


def reflect_divide(p: LaurentPoly, c: int) -> LaurentPoly:
    """(p - s.p) / (1 - z**-c), exactly.

    Always divisible for c = 1, 2; for c = 4 only when p has even exponents.
    """
    if c not in (1, 2, 4):
        raise ValueError("reflect_divide supports c in {1, 2, 4}")
    return divide_exact(p - p.involve(), _one_minus_zinv(c))


class RationalFunction:
    """Quotient num/den of Laurent polynomials, kept unreduced.

    Only used to assemble operator coefficients; it is collapsed back to a
    Laurent polynomial with :meth:`to_laurent` once the full numerator of an
    operator row has been formed.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num if isinstance(num, LaurentPoly) else LaurentPoly.constant(num)
        self.den = LaurentPoly.constant(1) if den is None else den

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (LaurentPoly, numbers.Number)):
            return RationalFunction(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        if other.den == 1:
            return RationalFunction(self.num + other.num * self.den, self.den)
        if self.den == 1:
            return RationalFunction(self.num * other.den + other.num, other.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, numbers.Number)):
            return RationalFunction(self.num * other, self.den)
        if isinstance(other, RationalFunction):
            return RationalFunction(self.num * other.num, self.den * other.den)
        return NotImplemented

    __rmul__ = __mul__

    def to_laurent(self) -> LaurentPoly:
        return divide_exact(self.num, self.den)

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"
