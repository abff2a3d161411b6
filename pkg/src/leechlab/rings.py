"""Exact arithmetic in the two small number rings used throughout.

``Eisenstein`` is Z[w] with w a primitive cube root of unity
(w**2 + w + 1 = 0).  ``QSqrt5`` is Q(sqrt 5), stored as (a + b*sqrt5)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Eisenstein:
    """a + b*w with integer a, b and w**2 = -1 - w."""

    a: int = 0
    b: int = 0

    @classmethod
    def _maybe(cls, x):
        try:
            return cls.coerce(x)
        except TypeError:
            return None

    @classmethod
    def coerce(cls, x) -> "Eisenstein":
        if isinstance(x, Eisenstein):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {x!r} to Eisenstein")

    def __add__(self, other):
        other = Eisenstein._maybe(other)
        if other is None:
            return NotImplemented
        return Eisenstein(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Eisenstein(-self.a, -self.b)

    def __sub__(self, other):
        other = Eisenstein._maybe(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Eisenstein.coerce(other) - self

    def __mul__(self, other):
        other = Eisenstein._maybe(other)
        if other is None:
            return NotImplemented
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
        ac = self.a * other.a
        bd = self.b * other.b
        return Eisenstein(ac - bd, self.a * other.b + self.b * other.a - bd)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not in the ring")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "Eisenstein":
        # complex conjugation sends w to w^2 = -1 - w
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational_integer(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        bw = "w" if abs(self.b) == 1 else f"{abs(self.b)}w"
        if self.a == 0:
            return bw if self.b > 0 else f"-{bw}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{bw}"


ZERO = Eisenstein(0, 0)
ONE = Eisenstein(1, 0)
OMEGA = Eisenstein(0, 1)
OMEGA2 = OMEGA * OMEGA


def omega_power(k: int) -> Eisenstein:
    return (ONE, OMEGA, OMEGA2)[k % 3]


@dataclass(frozen=True)
class QSqrt5:
    """(a + b*sqrt5)/2 with rational a, b.

    Algebraic integers of Q(sqrt5) are exactly the values with integer
    a, b of equal parity; character values of A6 all have that form.
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def coerce(cls, x) -> "QSqrt5":
        if isinstance(x, QSqrt5):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(2 * Fraction(x), 0)
        raise TypeError(f"cannot coerce {x!r} to QSqrt5")

    def __add__(self, other):
        other = QSqrt5.coerce(other)
        return QSqrt5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-QSqrt5.coerce(other))

    def __rsub__(self, other):
        return QSqrt5.coerce(other) - self

    def __mul__(self, other):
        other = QSqrt5.coerce(other)
        # ((a + b r)/2)((c + d r)/2) = ((ac + 5bd) + (ad + bc) r)/4
        return QSqrt5(
            (self.a * other.a + 5 * self.b * other.b) / 2,
            (self.a * other.b + self.b * other.a) / 2,
        )

    __rmul__ = __mul__

    def galois(self) -> "QSqrt5":
        return QSqrt5(self.a, -self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integral(self) -> bool:
        return (self.a.denominator == 1 and self.b.denominator == 1
                and (self.a - self.b) % 2 == 0)

    def rational_part(self) -> Fraction:
        return self.a / 2

    def sqrt5_part(self) -> Fraction:
        return self.b / 2

    def __eq__(self, other):
        try:
            other = QSqrt5.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __str__(self):
        """Canonical text form ``a/2+b/2√5`` (integers print plainly)."""
        if self.b == 0 and (self.a / 2).denominator == 1:
            return str(self.a / 2)
        sign = "+" if self.b >= 0 else "-"
        return f"{_frac(self.a)}/2{sign}{_frac(abs(self.b))}/2√5"


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"({x})"


SQRT5 = QSqrt5(0, 2)
