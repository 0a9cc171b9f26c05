"""Exact arithmetic in Q and in real quadratic fields Q(sqrt(N)).

Rationals are ``fractions.Fraction`` (re-exported as ``Rat``).  Quadratic
numbers are ``QuadNum`` values ``a + b*sqrt(radicand)`` kept in a canonical
form with square-free radicand, so equality and ordering are decidable by
integer comparisons alone.  Nothing here touches floating point; decimal
output is rendering-only.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Union

Rat = Fraction

RatLike = Union[int, Fraction]

__all__ = [
    "Rat",
    "QuadNum",
    "IncompatibleRadicandsError",
    "canonicalize",
    "quad_sign",
    "quad_add",
    "quad_mul",
    "quad_neg",
    "quad_inv",
    "rat_from_str",
    "rat_to_str",
    "squarefree_decompose",
]


class IncompatibleRadicandsError(ValueError):
    """Raised when two genuinely irrational values live in different fields."""


def rat_from_str(text: str) -> Fraction:
    """Parse ``"p/q"`` (or ``"p"``) into an exact rational."""
    return Fraction(text.strip())


def rat_to_str(x: RatLike) -> str:
    """Serialize a rational as ``"p/q"`` with positive denominator."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write ``n >= 0`` as ``f*f*m`` with ``m`` square-free; return ``(f, m)``."""
    if n < 0:
        raise ValueError(f"radicand must be nonnegative, got {n}")
    if n in (0, 1):
        return 1, n
    f, m, rem = 1, 1, n
    p = 2
    while p * p <= rem:
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            f *= p ** (e // 2)
            if e % 2:
                m *= p
        p += 1 if p == 2 else 2
    return f, m * rem


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point is not allowed in exact arithmetic")
    return Fraction(x)


class QuadNum:
    """An element ``a + b*sqrt(radicand)`` of a real quadratic field.

    Canonical form: the radicand is square-free; radicands 0 and 1 fold into
    the rational part; ``b == 0`` forces radicand 0 (the embedding of Rat).
    Construction canonicalizes, so equal values have equal field triples.
    """

    __slots__ = ("a", "b", "radicand")

    a: Fraction
    b: Fraction
    radicand: int

    def __init__(self, a: RatLike = 0, b: RatLike = 0, radicand: int = 0):
        a = _as_fraction(a)
        b = _as_fraction(b)
        if isinstance(radicand, bool) or not isinstance(radicand, int):
            raise TypeError(f"radicand must be an int, got {radicand!r}")
        n = radicand
        if n < 0:
            raise ValueError(f"radicand must be nonnegative, got {n}")
        if n in (0, 1):
            a, b, n = a + b * n, Fraction(0), 0
        elif b == 0:
            n = 0
        else:
            f, m = squarefree_decompose(n)
            if m == 1:
                a, b, n = a + b * f, Fraction(0), 0
            else:
                b, n = b * f, m
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "radicand", n)

    def __setattr__(self, name, value):
        raise AttributeError("QuadNum is immutable")

    # -- helpers ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @staticmethod
    def _coerce(value) -> "QuadNum":
        if isinstance(value, QuadNum):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return QuadNum(value)
        raise TypeError(f"cannot interpret {value!r} as a quadratic number")

    def _join_radicand(self, other: "QuadNum") -> int:
        if self.radicand == other.radicand:
            return self.radicand
        if self.b == 0:
            return other.radicand
        if other.b == 0:
            return self.radicand
        raise IncompatibleRadicandsError(
            f"cannot combine sqrt({self.radicand}) with sqrt({other.radicand})"
        )

    # -- ring and field operations ---------------------------------------

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = self._join_radicand(other)
        return QuadNum(self.a + other.a, self.b + other.b, n)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.radicand)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = self._join_radicand(other)
        return QuadNum(
            self.a * other.a + self.b * other.b * n,
            self.a * other.b + self.b * other.a,
            n,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadNum":
        """Exact inverse via conjugation: 1/(a+b*sqrt(n)) = (a-b*sqrt(n))/(a^2-b^2*n)."""
        norm = self.a * self.a - self.b * self.b * self.radicand
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadNum(self.a / norm, -self.b / norm, self.radicand)

    def __truediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = QuadNum(1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.a, -self.b, self.radicand)

    # -- sign, equality, order -------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}, by integer comparison of a^2 vs b^2*n."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        lhs = self.a * self.a
        rhs = self.b * self.b * self.radicand
        if lhs == rhs:
            return 0
        if lhs > rhs:
            return 1 if self.a > 0 else -1
        return 1 if self.b > 0 else -1

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (
            self.a == other.a
            and self.b == other.b
            and self.radicand == other.radicand
        )

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.radicand))

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- rendering and serialization --------------------------------------

    def __repr__(self):
        return f"QuadNum({self.a!s}, {self.b!s}, {self.radicand})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        term = f"sqrt({self.radicand})"
        if abs(self.b) != 1:
            term = f"{abs(self.b)}*{term}"
        if self.a == 0:
            return term if self.b > 0 else f"-{term}"
        connector = "+" if self.b > 0 else "-"
        return f"{self.a} {connector} {term}"

    def approx_fraction(self, digits: int = 50) -> Fraction:
        """Rational approximation with error below ``|b| * 10**-digits``."""
        if self.b == 0:
            return self.a
        scale = 10**digits
        root = isqrt(self.radicand * scale * scale)
        return self.a + self.b * Fraction(root, scale)

    def decimal(self, digits: int = 12) -> str:
        """Decimal rendering (display only, never used in comparisons)."""
        value = self.approx_fraction(digits + 8)
        scale = 10**digits
        scaled = value * scale
        units = scaled.numerator // scaled.denominator
        if units < 0 and scaled != units:
            units += 1  # truncate toward zero
        sign = "-" if value < 0 else ""
        units = abs(units)
        return f"{sign}{units // scale}.{units % scale:0{digits}d}"

    def to_json(self) -> dict:
        return {
            "a": rat_to_str(self.a),
            "b": rat_to_str(self.b),
            "radicand": self.radicand,
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuadNum":
        return cls(
            rat_from_str(data["a"]), rat_from_str(data["b"]), int(data["radicand"])
        )


def canonicalize(x: QuadNum) -> QuadNum:
    """Return ``x`` with square-free radicand; idempotent, value-preserving."""
    return QuadNum(x.a, x.b, x.radicand)


def quad_sign(x: QuadNum) -> int:
    return x.sign()


def quad_add(x: QuadNum, y: QuadNum) -> QuadNum:
    return QuadNum._coerce(x) + y


def quad_mul(x: QuadNum, y: QuadNum) -> QuadNum:
    return QuadNum._coerce(x) * y


def quad_neg(x: QuadNum) -> QuadNum:
    return -QuadNum._coerce(x)


def quad_inv(x: QuadNum) -> QuadNum:
    return QuadNum._coerce(x).inverse()
