from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction

from .errors import ModeError, ParameterOutOfRange

EXACT = "exact"
FLOAT = "float"


def parse_number(text):
    """Parse ``"p/q"``, an integer or a decimal string into a number."""
    if isinstance(text, numbers.Number):
        return text
    text = str(text).strip()
    try:
        return Fraction(text)
    except ValueError:
        return float(text)


def _is_nonneg_integer(v):
    return isinstance(v, numbers.Rational) and Fraction(v).denominator == 1 and v >= 0


@dataclass(frozen=True)
class Multiplicity:
    """Root multiplicity ``(k1, k2)`` on the short and long roots.

    ``scale`` is 1 for the root system {±e, ±2e} and 2 for its double, where
    every root (and therefore every exponent and rho) is multiplied by 2.
    The mode defaults to exact whenever both parameters are nonnegative
    integers.
    """

    k1: object
    k2: object
    scale: int = 1
    mode: str | None = None

    def __post_init__(self):
        k1, k2 = parse_number(self.k1), parse_number(self.k2)
        mode = self.mode
        if mode is None:
            mode = EXACT if _is_nonneg_integer(k1) and _is_nonneg_integer(k2) else FLOAT
        if self.scale not in (1, 2):
            raise ParameterOutOfRange("scale must be 1 or 2")
        if mode == EXACT:
            if not (_is_nonneg_integer(k1) and _is_nonneg_integer(k2)):
                raise ModeError("exact mode needs nonnegative integer k1, k2")
            k1, k2 = Fraction(k1), Fraction(k2)
        elif mode == FLOAT:
            k1, k2 = float(k1), float(k2)
            if not (k1 + k2 > -0.5 and k2 > -0.5):
                raise ParameterOutOfRange("weight not integrable: need k1+k2 > -1/2 and k2 > -1/2")
        else:
            raise ValueError(f"unknown mode {mode!r}")
        object.__setattr__(self, "k1", k1)
        object.__setattr__(self, "k2", k2)
        object.__setattr__(self, "mode", mode)

    @property
    def exact(self) -> bool:
        return self.mode == EXACT

    @property
    def rho(self):
        """Half-sum of positive roots weighted by multiplicity (times scale)."""
        return self.scale * (self.k1 + 2 * self.k2) / 2

    @property
    def rho_unscaled(self):
        return (self.k1 + 2 * self.k2) / 2

    def with_k2(self, k2):
        return Multiplicity(self.k1, k2, self.scale, None if self.exact else self.mode)

    def require_exact(self, what="operation"):
        if not self.exact:
            raise ModeError(f"{what} requires exact mode")

    def label(self):
        return f"({self.k1},{self.k2})" + ("" if self.scale == 1 else f"x{self.scale}")
