"""Exact complex scalars with arbitrary-precision rational parts."""

from __future__ import annotations

from fractions import Fraction


class QQi:
    """Complex scalar whose real and imaginary parts are exact rationals.

    Instances are immutable by convention; all arithmetic returns fresh
    objects and never rounds.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def is_zero(self):
        return not self.re and not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        return QQi(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return QQi(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __mul__(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        return QQi(a * c - b * d, a * d + b * c)

    def __truediv__(self, other):
        c, d = other.re, other.im
        denom = c * c + d * d
        if not denom:
            raise ZeroDivisionError("division by zero scalar")
        a, b = self.re, self.im
        return QQi((a * c + b * d) / denom, (b * c - a * d) / denom)

    def inverse(self):
        return ONE / self

    def conjugate(self):
        return QQi(self.re, -self.im)

    def __eq__(self, other):
        if not isinstance(other, QQi):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"QQi({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = QQi(0, 0)
ONE = QQi(1, 0)


def qq(re, im=0):
    """Coerce ints, Fractions, or numeric strings into a QQi scalar.

    Strings are parsed exactly: "0.5" and "1/2" both denote one half.
    """
    return QQi(Fraction(re), Fraction(im))


def parse_pair(pair):
    """Parse a [re, im] pair of decimal/rational strings or numbers exactly."""
    re, im = pair
    return QQi(_parse_part(re), _parse_part(im))


def _parse_part(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        raise ValueError(
            f"refusing to parse float {x!r} exactly; pass a decimal string instead"
        )
    return Fraction(str(x))


def pair_str(q: QQi):
    """Serialize a scalar as a [re, im] pair of exact strings."""
    return [str(q.re), str(q.im)]
