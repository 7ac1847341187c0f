"""Exact numbers: rationals, real quadratic irrationals, Hirzebruch-Jung chains.

Rationals are plain :class:`fractions.Fraction`.  :class:`QuadNumber` holds
``a + b*sqrt(d)`` with rational ``a, b`` and a square-free ``d >= 0``; every
quantity downstream (weights, eigenvalues, log-discrepancies) lives in one of
these two types, so no rounding ever happens.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from numbers import Rational

__all__ = [
    "IncompatibleFieldError",
    "InvalidInputError",
    "QuadNumber",
    "as_quad",
    "hj_expand",
    "hj_value",
    "is_square",
    "quad_sign",
    "squarefree_part",
]


class InvalidInputError(ValueError):
    """Raised when an operation receives arguments outside its domain."""


class IncompatibleFieldError(ArithmeticError):
    """Raised when numbers from different quadratic fields are mixed."""


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def squarefree_part(n: int) -> tuple[int, int]:
    """Return ``(f, d)`` with ``n = f**2 * d`` and ``d`` square-free."""
    if n < 0:
        raise InvalidInputError(f"expected a non-negative integer, got {n}")
    if n == 0:
        return 0, 0
    f, d = 1, n
    p = 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            f *= p
        p += 1
    return f, d


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


@total_ordering
class QuadNumber:
    """An element ``a + b*sqrt(d)`` of the real field Q(sqrt d).

    ``d = 0`` (with ``b = 0``) encodes a plain rational.  Construction moves
    square factors of ``d`` into ``b``, so equality is componentwise.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a=0, b=0, d: int = 0) -> None:
        a, b = _frac(a), _frac(b)
        if not isinstance(d, int) or isinstance(d, bool):
            raise TypeError("d must be an int")
        f, d = squarefree_part(d)
        b *= f
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        if b == 0:
            d = 0
        self._a, self._b, self._d = a, b, d

    @classmethod
    def sqrt(cls, n) -> QuadNumber:
        """The positive square root of a non-negative rational."""
        n = _frac(n)
        if n < 0:
            raise InvalidInputError(f"square root of negative number {n}")
        # sqrt(p/q) = sqrt(p*q)/q
        return cls(0, Fraction(1, n.denominator), n.numerator * n.denominator)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    def is_rational(self) -> bool:
        return self._b == 0

    def to_fraction(self) -> Fraction:
        if self._b:
            raise InvalidInputError(f"{self} is irrational")
        return self._a

    def conjugate(self) -> QuadNumber:
        return QuadNumber(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return self._a * self._a - self._b * self._b * self._d

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * self._d**0.5

    def __repr__(self) -> str:
        if self._b == 0:
            return f"QuadNumber({self._a})"
        return f"QuadNumber({self._a}, {self._b}, {self._d})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        coef = "" if abs(self._b) == 1 else f"{abs(self._b)}*"
        root = f"{coef}sqrt({self._d})"
        if self._a == 0:
            return root if self._b > 0 else f"-{root}"
        return f"{self._a} {'+' if self._b > 0 else '-'} {root}"

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    # -- arithmetic ---------------------------------------------------------

    def _common(self, other) -> tuple[QuadNumber, int]:
        if not isinstance(other, QuadNumber):
            other = QuadNumber(_frac(other))
        if self._d and other._d and self._d != other._d:
            raise IncompatibleFieldError(
                f"cannot mix Q(sqrt {self._d}) and Q(sqrt {other._d})"
            )
        return other, self._d or other._d

    def __add__(self, other):
        try:
            o, d = self._common(other)
        except TypeError:
            return NotImplemented
        return QuadNumber(self._a + o._a, self._b + o._b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o, d = self._common(other)
        except TypeError:
            return NotImplemented
        return QuadNumber(self._a - o._a, self._b - o._b, d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            o, d = self._common(other)
        except TypeError:
            return NotImplemented
        return QuadNumber(
            self._a * o._a + self._b * o._b * d,
            self._a * o._b + self._b * o._a,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o, d = self._common(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        inv = QuadNumber(o._a / n, -o._b / n, d)
        return self * inv

    def __rtruediv__(self, other):
        try:
            o, _ = self._common(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __abs__(self):
        return -self if quad_sign(self) < 0 else self

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadNumber):
            return (self._a, self._b, self._d) == (other._a, other._b, other._d)
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, float):
            return NotImplemented
        try:
            return quad_sign(self - other) < 0
        except TypeError:
            return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)


def as_quad(x) -> QuadNumber:
    return x if isinstance(x, QuadNumber) else QuadNumber(_frac(x))


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def quad_sign(x: QuadNumber | int | Fraction) -> int:
    """Exact sign of ``a + b*sqrt(d)`` under the embedding ``sqrt(d) > 0``."""
    x = as_quad(x)
    sa, sb = _sgn(x.a), _sgn(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: decided by |a| vs |b|*sqrt(d), i.e. a^2 vs b^2 d
    return sa if x.a * x.a > x.b * x.b * x.d else sb


def hj_expand(p: int, q: int) -> list[int]:
    """Hirzebruch-Jung ("minus") continued fraction of ``p/q``.

    Returns ``[a1, ..., an]`` with every ``ai >= 2`` and
    ``a1 - 1/(a2 - 1/(... - 1/an)) = p/q``.
    """
    if not (isinstance(p, int) and isinstance(q, int)):
        raise InvalidInputError("p and q must be integers")
    if not (0 < q < p and gcd(p, q) == 1):
        raise InvalidInputError(f"need 0 < q < p coprime, got ({p}, {q})")
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return out


def hj_value(chain) -> tuple[int, int]:
    """Inverse of :func:`hj_expand`: the coprime pair ``(p, q)`` of a chain."""
    chain = list(chain)
    if not chain:
        raise InvalidInputError("empty chain")
    for a in chain:
        if not isinstance(a, int) or a < 2:
            raise InvalidInputError(f"chain entries must be integers >= 2, got {a}")
    p, q = chain[-1], 1
    for a in reversed(chain[:-1]):
        p, q = a * p - q, p
    return p, q
