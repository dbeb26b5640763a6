"""Exact arithmetic in the Gaussian rationals Q(i).

A :class:`GaussianRational` is stored as ``(a + b*i) / d`` with integers
``a, b`` and ``d > 0`` and ``gcd(a, b, d) == 1``.  That form is unique, so two
values are equal exactly when their stored triples are identical.  The real and
imaginary parts are available as :class:`fractions.Fraction` objects.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

__all__ = ["GaussianRational", "ParseError", "gq", "arith", "parse", "format_scalar", "ZERO", "ONE", "I"]


class ParseError(ValueError):
    """Malformed scalar text.  ``position`` is the 0-based offending offset."""

    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def _canon(a, b, d):
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g != 1:
        a //= g
        b //= g
        d //= g
    return a, b, d


class GaussianRational:
    __slots__ = ("_a", "_b", "_d", "_hash")

    def __new__(cls, re=0, im=0):
        if isinstance(re, GaussianRational) and im == 0:
            return re
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        return cls._make(*_canon(a, b, d))

    @classmethod
    def _make(cls, a, b, d):
        # caller guarantees canonical (a, b, d)
        self = object.__new__(cls)
        self._a = a
        self._b = b
        self._d = d
        self._hash = None
        return self

    @classmethod
    def from_parts(cls, a, b, d=1):
        """Build ``(a + b*i)/d`` from integers, canonicalizing."""
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        return cls._make(*_canon(a, b, d))

    # -- accessors -------------------------------------------------------
    @property
    def re(self):
        return Fraction(self._a, self._d)

    @property
    def im(self):
        return Fraction(self._b, self._d)

    @property
    def parts(self):
        """The canonical triple ``(a, b, d)``."""
        return self._a, self._b, self._d

    def is_zero(self):
        return self._a == 0 and self._b == 0

    def is_real(self):
        return self._b == 0

    def conjugate(self):
        return GaussianRational._make(self._a, -self._b, self._d)

    def norm(self):
        """Squared modulus ``re**2 + im**2`` as a Fraction."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, _RationalABC)):
            return GaussianRational(other)
        if isinstance(other, complex):
            return GaussianRational(Fraction(other.real), Fraction(other.imag))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return GaussianRational.from_parts(self._a + o._a, self._b + o._b, d1)
        return GaussianRational.from_parts(self._a * d2 + o._a * d1, self._b * d2 + o._b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._make(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, e = self._a, self._b, o._a, o._b
        return GaussianRational.from_parts(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("GaussianRational division by zero")
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        # d / (a + bi) = d (a - bi) / n
        return GaussianRational.from_parts(d * a, -d * b, n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._hash is None:
            if self._b == 0:
                # agree with hash(Fraction) / hash(int) for real values
                self._hash = hash(Fraction(self._a, self._d))
            else:
                self._hash = hash((self._a, self._b, self._d))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(self._a / self._d, self._b / self._d)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)

    def __reduce__(self):
        return (GaussianRational.from_parts, (self._a, self._b, self._d))


ZERO = GaussianRational._make(0, 0, 1)
ONE = GaussianRational._make(1, 0, 1)
I = GaussianRational._make(0, 1, 1)


def gq(value):
    """Coerce ``value`` (int, Fraction, complex, str or GaussianRational)."""
    if isinstance(value, str):
        return parse(value)
    o = GaussianRational._coerce(value)
    if o is None:
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")
    return o


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def arith(a, b, op):
    """``op`` in {"add", "sub", "mul", "div"}; division by zero raises ZeroDivisionError."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(gq(a), gq(b))


# [±]a[/b][[±]c[/d]i]
_SCALAR = re.compile(r"([+-]?)(\d+)(?:/(\d+))?(?:([+-])(\d+)(?:/(\d+))?i)?")


def parse(text):
    """Parse ``[±]a[/b][[±]c[/d]i]``, e.g. ``"1/2"`` or ``"-3+2/5i"``."""
    if not isinstance(text, str):
        raise TypeError("scalar text must be a string")
    m = _SCALAR.match(text)
    if m is None:
        raise ParseError("expected a scalar", text, 0)
    if m.end() != len(text):
        raise ParseError("unexpected character", text, m.end())
    sign, a, b, isign, c, d = m.groups()
    for group in (3, 6):
        if m.group(group) is not None and int(m.group(group)) == 0:
            raise ParseError("zero denominator", text, m.start(group))
    re_part = Fraction(int(a), int(b) if b else 1)
    if sign == "-":
        re_part = -re_part
    im_part = Fraction(0)
    if c is not None:
        im_part = Fraction(int(c), int(d) if d else 1)
        if isign == "-":
            im_part = -im_part
    return GaussianRational(re_part, im_part)


def _frac_text(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x):
    """Inverse of :func:`parse`; the imaginary part is omitted when zero."""
    x = gq(x)
    text = _frac_text(x.re)
    if x.im != 0:
        im = x.im
        text += ("-" if im < 0 else "+") + _frac_text(abs(im)) + "i"
    return text
