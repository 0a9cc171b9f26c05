"""Numerical seeds, the two-term matrix recurrence, and the invariants d, D, theta.

A seed is the quadruple (r_m1, r_0, d_m1, d_0) of ranks and degrees of two
consecutive terms.  Everything else is derived: the hom dimension
``d = d_0*r_m1 - d_m1*r_0``, the quadratic invariant
``D = d*r_m1*r_0 - r_m1^2 - r_0^2``, and the negative limit slope theta.
Rank/degree sequences extend in both directions through the recurrence
``a_{n+1} = d*a_n - a_{n-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .exact_arith import QuadNum

__all__ = [
    "Seed",
    "SpectralData",
    "Theta",
    "ExtendVerdict",
    "VerdictKind",
    "RejectReason",
    "NonPositiveRankError",
    "NotExtendableError",
    "NotApplicableError",
    "seed_det",
    "big_D",
    "extendable",
    "rank_deg_window",
    "spectral",
    "theta",
    "coprimality_violations",
]


class NonPositiveRankError(ValueError):
    """A rank that must be positive is zero or negative."""


class NotExtendableError(ValueError):
    """The seed does not extend to a helix, so the operation is undefined."""


class NotApplicableError(ValueError):
    """The operation requires hom dimension d > 2."""


@dataclass(frozen=True)
class Seed:
    """Ranks (r_m1, r_0) and degrees (d_m1, d_0) of two consecutive terms."""

    r_m1: int
    r_0: int
    d_m1: int
    d_0: int

    def __post_init__(self):
        for name in ("r_m1", "r_0", "d_m1", "d_0"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")
        if self.r_m1 <= 0 or self.r_0 <= 0:
            raise NonPositiveRankError(
                f"ranks must be positive, got ({self.r_m1}, {self.r_0})"
            )

    @property
    def ranks(self) -> tuple[int, int]:
        return (self.r_m1, self.r_0)

    @property
    def degrees(self) -> tuple[int, int]:
        return (self.d_m1, self.d_0)

    @property
    def det(self) -> int:
        return seed_det(self)

    @property
    def big_d(self) -> int:
        return big_D(self.r_m1, self.r_0, self.det)

    def slope(self, which: int) -> Fraction:
        """Slope degree/rank of the term at index -1 or 0."""
        if which == -1:
            return Fraction(self.d_m1, self.r_m1)
        if which == 0:
            return Fraction(self.d_0, self.r_0)
        raise ValueError("slope index must be -1 or 0")

    def to_json(self) -> dict:
        return {"r": [self.r_m1, self.r_0], "deg": [self.d_m1, self.d_0]}

    @classmethod
    def from_json(cls, data: dict) -> "Seed":
        r = data["r"]
        deg = data["deg"]
        if len(r) != 2 or len(deg) != 2:
            raise ValueError("seed JSON needs two ranks and two degrees")
        return cls(int(r[0]), int(r[1]), int(deg[0]), int(deg[1]))


def seed_det(s: Seed) -> int:
    """d_0*r_m1 - d_m1*r_0, the hom dimension d of a valid seed."""
    return s.d_0 * s.r_m1 - s.d_m1 * s.r_0


def big_D(r_m1: int, r_0: int, d: int) -> int:
    """The quadratic rank invariant d*r_m1*r_0 - r_m1^2 - r_0^2."""
    return d * r_m1 * r_0 - r_m1 * r_m1 - r_0 * r_0


class VerdictKind(Enum):
    YES2 = "Yes2"
    YES_GENERIC = "YesGeneric"
    NO = "No"


class RejectReason(Enum):
    D_TOO_SMALL = "DTooSmall"
    D_NONPOSITIVE = "DNonPositive"
    RANK_DEGREE_D2_VIOLATION = "RankDegreeD2Violation"
    SLOPE_ORDER_VIOLATION = "SlopeOrderViolation"


@dataclass(frozen=True)
class ExtendVerdict:
    kind: VerdictKind
    reason: RejectReason | None = None

    @property
    def extends(self) -> bool:
        return self.kind is not VerdictKind.NO

    def __str__(self):
        if self.reason is None:
            return self.kind.value
        return f"{self.kind.value}({self.reason.value})"


_YES2 = ExtendVerdict(VerdictKind.YES2)
_YES_GENERIC = ExtendVerdict(VerdictKind.YES_GENERIC)


def extendable(s: Seed) -> ExtendVerdict:
    """Decide whether the seed extends to a helix in both directions.

    Yes2 needs d = 2 with unit ranks and degree step 2; YesGeneric needs
    d > 2 and D > 0.  Slope order d_m1/r_m1 < d_0/r_0 is checked first.
    """
    if s.d_m1 * s.r_0 >= s.d_0 * s.r_m1:
        return ExtendVerdict(VerdictKind.NO, RejectReason.SLOPE_ORDER_VIOLATION)
    d = seed_det(s)
    if d <= 1:
        return ExtendVerdict(VerdictKind.NO, RejectReason.D_TOO_SMALL)
    if d == 2:
        if s.r_m1 == 1 and s.r_0 == 1 and s.d_0 == s.d_m1 + 2:
            return _YES2
        return ExtendVerdict(VerdictKind.NO, RejectReason.RANK_DEGREE_D2_VIOLATION)
    if big_D(s.r_m1, s.r_0, d) > 0:
        return _YES_GENERIC
    return ExtendVerdict(VerdictKind.NO, RejectReason.D_NONPOSITIVE)


def _sequence_values(v_m1: int, v_0: int, d: int, n_min: int, n_max: int) -> dict[int, int]:
    """Values v_n for n in [n_min, n_max] of the recurrence v_{n+1} = d*v_n - v_{n-1}."""
    values = {-1: v_m1, 0: v_0}
    x, y = v_m1, v_0
    for n in range(1, n_max + 1):
        x, y = y, d * y - x
        values[n] = y
    x, y = v_m1, v_0
    for n in range(-2, n_min - 1, -1):
        x, y = d * x - y, x
        values[n] = x
    return {n: values[n] for n in range(n_min, n_max + 1)}


def rank_deg_window(
    s: Seed, n_min: int = -40, n_max: int = 40
) -> list[tuple[int, int, int]]:
    """Exact (n, r_n, d_n) triples for n in [n_min, n_max]."""
    if n_min > n_max:
        raise ValueError("window requires n_min <= n_max")
    d = seed_det(s)
    ranks = _sequence_values(s.r_m1, s.r_0, d, n_min, n_max)
    degs = _sequence_values(s.d_m1, s.d_0, d, n_min, n_max)
    return [(n, ranks[n], degs[n]) for n in range(n_min, n_max + 1)]


@dataclass(frozen=True)
class SpectralData:
    """Eigenvalues alpha_+/- and eigenvector coefficients of the recurrence.

    Defined only for d > 2.  The closed form a_n = alpha_+^(n+1)*a_+ +
    alpha_-^(n+1)*a_- reproduces the integer sequences exactly.
    """

    alpha_plus: QuadNum
    alpha_minus: QuadNum
    r_plus: QuadNum
    r_minus: QuadNum
    d_plus: QuadNum
    d_minus: QuadNum

    def rank(self, n: int) -> QuadNum:
        return self.alpha_plus ** (n + 1) * self.r_plus + self.alpha_minus ** (
            n + 1
        ) * self.r_minus

    def degree(self, n: int) -> QuadNum:
        return self.alpha_plus ** (n + 1) * self.d_plus + self.alpha_minus ** (
            n + 1
        ) * self.d_minus


def spectral(s: Seed) -> SpectralData:
    """Diagonalize the recurrence over Q(sqrt(d^2-4)); requires d > 2."""
    d = seed_det(s)
    if d <= 2:
        raise NotApplicableError(
            f"spectral data needs d > 2 (got d = {d}; d = 2 is the unipotent case)"
        )
    disc = d * d - 4
    half = Fraction(1, 2)
    alpha_plus = QuadNum(Fraction(d, 2), half, disc)
    alpha_minus = QuadNum(Fraction(d, 2), -half, disc)
    gap = alpha_plus - alpha_minus
    r_plus = (QuadNum(s.r_0) - alpha_minus * s.r_m1) / gap
    d_plus = (QuadNum(s.d_0) - alpha_minus * s.d_m1) / gap
    return SpectralData(
        alpha_plus=alpha_plus,
        alpha_minus=alpha_minus,
        r_plus=r_plus,
        r_minus=QuadNum(s.r_m1) - r_plus,
        d_plus=d_plus,
        d_minus=QuadNum(s.d_m1) - d_plus,
    )


@dataclass(frozen=True)
class Theta:
    """Negative limit slope: a canonical QuadNum, or the d = 2 sentinel -inf."""

    value: QuadNum | None = None

    @classmethod
    def finite(cls, value: QuadNum) -> "Theta":
        return cls(value)

    @classmethod
    def neg_infinity(cls) -> "Theta":
        return cls(None)

    @property
    def is_neg_infinity(self) -> bool:
        return self.value is None

    def __str__(self):
        return "-inf" if self.value is None else str(self.value)

    def __add__(self, other: int):
        if self.value is None:
            return self
        return Theta(self.value + other)

    def to_json(self) -> dict:
        if self.value is None:
            return {"neg_infinity": True}
        return self.value.to_json()

    @classmethod
    def from_json(cls, data: dict) -> "Theta":
        if data.get("neg_infinity"):
            return cls.neg_infinity()
        return cls(QuadNum.from_json(data))


def theta(s: Seed) -> Theta:
    """Limit of the slopes d_n/r_n as n -> -infinity, exactly.

    For d > 2 the limit lies in Q + Q*sqrt(d^2-4) and the irrational
    coefficient is strictly negative; for d = 2 the limit is -infinity.
    """
    verdict = extendable(s)
    if not verdict.extends:
        raise NotExtendableError(f"seed does not extend to a helix: {verdict}")
    if verdict.kind is VerdictKind.YES2:
        return Theta.neg_infinity()
    d = seed_det(s)
    denom = 2 * (s.r_0 * s.r_0 + s.r_m1 * s.r_m1 - d * s.r_0 * s.r_m1)
    numer = 2 * (s.r_0 * s.d_0 + s.d_m1 * s.r_m1) - d * (
        s.r_0 * s.d_m1 + s.d_0 * s.r_m1
    )
    return Theta.finite(
        QuadNum(Fraction(numer, denom), Fraction(d, denom), d * d - 4)
    )


def coprimality_violations(s: Seed, window: int = 30) -> list[int]:
    """Indices n with gcd(r_n, d_n) != 1 in [-window, window].

    Coordinate-wise coprimality is expected to propagate along the sequence
    of a relatively prime seed; this check flags violations instead of
    assuming the propagation.
    """
    return [
        n
        for n, r_n, d_n in rank_deg_window(s, -window, window)
        if gcd(r_n, d_n) != 1
    ]
