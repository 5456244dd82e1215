"""Exact Gaussian rationals: a + bi with a, b in Q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

_ZERO = Fraction(0)


def _frac(x) -> Fraction:
    if type(x) is Fraction:
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {x!r} as an exact rational")


class Gaussian:
    """Immutable element of Q(i).

    Compares equal to ints and Fractions with zero imaginary part, and hashes
    consistently with them, so it can be mixed into dict keys and ``==``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gaussian is immutable")

    @classmethod
    def coerce(cls, x) -> "Gaussian":
        if type(x) is cls:
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return cls(x)

    @classmethod
    def parse(cls, re: str, im: str = "0") -> "Gaussian":
        return cls(Fraction(re), Fraction(im))

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            o = Gaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = Gaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = Gaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = Gaussian.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if b == 0 and d == 0:
            return Gaussian(a * c)
        return Gaussian(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = Gaussian.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * Gaussian(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        return Gaussian.coerce(other) / self

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (Gaussian(1) / self) ** (-k)
        out, base = Gaussian(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    # predicates / conversion ---------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def as_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.re.numerator

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"Gaussian({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj) -> "Gaussian":
        if isinstance(obj, dict):
            return cls.parse(str(obj.get("re", "0")), str(obj.get("im", "0")))
        if isinstance(obj, (int, str)):
            return cls.parse(str(obj))
        raise ValueError(f"malformed scalar {obj!r}")


Scalar = Gaussian
ZERO = Gaussian(0)
ONE = Gaussian(1)
I = Gaussian(0, 1)
HALF = Gaussian(Fraction(1, 2))
