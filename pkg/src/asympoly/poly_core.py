"""Exact rational scalars and dense univariate polynomials.

Coefficients are :class:`fractions.Fraction` values, which already keep the
canonical form we need (positive denominator, reduced, zero as ``0/1``).
A :class:`Polynomial` stores them lowest degree first and never carries
trailing zeros, so the zero polynomial is the empty tuple and its degree is
the sentinel :data:`NEG_INF`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction

#: Degree of the zero polynomial. Compares below every integer.
NEG_INF = float("-inf")

Scalar = Union[int, Fraction]


def make_rational(num: int, den: int = 1) -> Fraction:
    """Build a canonical rational ``num/den``.

    >>> make_rational(-4, -8)
    Fraction(1, 2)
    """
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def as_rational(value: Scalar | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(value, (int, str, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial in ``x``; ``coeffs[d]`` is the coefficient of ``x**d``."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        c = [as_rational(v) for v in self.coeffs]
        object.__setattr__(self, "coeffs", _strip(c))

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> Polynomial:
        # caller guarantees Fractions with no trailing zeros
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def zero(cls) -> Polynomial:
        return cls._raw(())

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, c: Scalar, d: int) -> Polynomial:
        if d < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls((0,) * d + (c,))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, d: int) -> Fraction:
        """Coefficient of ``x**d``; zero outside the stored range."""
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Polynomial) -> Polynomial:
        return poly_sub(self, _coerce(other))

    def __rsub__(self, other: Polynomial) -> Polynomial:
        return poly_sub(_coerce(other), self)

    def __mul__(self, other: Polynomial) -> Polynomial:
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        return poly_divmod(self, _coerce(other))

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return poly_divmod(self, _coerce(other))[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return poly_divmod(self, _coerce(other))[1]

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    def scale(self, c: Scalar) -> Polynomial:
        c = as_rational(c)
        if not c:
            return Polynomial.zero()
        return Polynomial._raw(tuple(v * c for v in self.coeffs))

    def shift(self, d: int) -> Polynomial:
        """Multiply by ``x**d``."""
        if not self.coeffs:
            return self
        return Polynomial._raw((Fraction(0),) * d + self.coeffs)

    def max_bit_length(self) -> int:
        """Largest numerator or denominator bit length among the coefficients."""
        return max(
            (max(c.numerator.bit_length(), c.denominator.bit_length()) for c in self.coeffs),
            default=0,
        )

    def __str__(self) -> str:
        from .parser import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def poly_from_coeffs(coeffs: Iterable[Scalar]) -> Polynomial:
    """Polynomial from coefficients listed lowest degree first."""
    return Polynomial(tuple(coeffs))


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Polynomial._raw(_strip(out))


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return Polynomial._raw(_strip(out))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Polynomial.zero()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    # product of two nonzero leading coefficients is nonzero
    return Polynomial._raw(tuple(out))


def poly_eval(p: Polynomial, x: Scalar) -> Fraction:
    """Horner evaluation at an exact point."""
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division: ``a == q*b + r`` with ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b.coeffs) - 1
    if len(a.coeffs) - 1 < db:
        return Polynomial.zero(), a
    rem = list(a.coeffs)
    lead = b.coeffs[-1]
    bc = b.coeffs
    quot = [Fraction(0)] * (len(rem) - db)
    for shift in range(len(quot) - 1, -1, -1):
        top = rem[shift + db]
        if not top:
            continue
        c = top / lead
        quot[shift] = c
        for i in range(db):
            rem[shift + i] -= c * bc[i]
        rem[shift + db] = Fraction(0)
    return Polynomial._raw(_strip(quot)), Polynomial._raw(_strip(rem[:db]))


def common_denominator(values: Sequence[Fraction]) -> int:
    from math import lcm

    return lcm(1, *(v.denominator for v in values))


@dataclass(frozen=True)
class RationalFunction:
    """``numerator / denominator`` with the degree data the asymptote needs.

    ``n`` is the numerator degree and ``k = n - deg(denominator)`` the degree
    gap; both follow the zero-polynomial sentinel when the numerator is zero.
    """

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self) -> None:
        num, den = _coerce(self.numerator), _coerce(self.denominator)
        if den.is_zero():
            raise ZeroDivisionError("denominator is zero")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def from_coeffs(cls, num: Iterable[Scalar], den: Iterable[Scalar]) -> RationalFunction:
        return cls(poly_from_coeffs(num), poly_from_coeffs(den))

    @property
    def n(self) -> int | float:
        return self.numerator.degree

    @property
    def k(self) -> int | float:
        return self.numerator.degree - self.denominator.degree

    def a(self, r: int) -> Fraction:
        """Numerator coefficient of ``x**r`` (zero outside ``0..n``)."""
        return self.numerator.coeff(r)

    def b(self, i: int) -> Fraction:
        """Denominator coefficient of ``x**i`` (zero outside ``0..n-k``)."""
        return self.denominator.coeff(i)

    def __call__(self, x: Scalar) -> Fraction:
        den = poly_eval(self.denominator, x)
        if not den:
            raise ZeroDivisionError(f"pole at x = {x}")
        return poly_eval(self.numerator, x) / den

    def scale(self, c: Scalar) -> RationalFunction:
        """Multiply numerator and denominator by the same nonzero constant."""
        if not as_rational(c):
            raise ValueError("scale factor must be nonzero")
        return RationalFunction(self.numerator.scale(c), self.denominator.scale(c))

    def __str__(self) -> str:
        from .parser import format_rational_function

        return format_rational_function(self)
