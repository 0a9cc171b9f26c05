"""Rank Diophantine solving, realizability, and class counting for (d, theta).

For fixed d > 2 and D > 0 the positive solutions of
``d*r_m1*r_0 - r_m1^2 - r_0^2 = D`` split into finitely many shift orbits,
each with a canonical minimal representative.  A rank vector is realizable
when a coordinate-wise coprime degree vector with determinant d exists; the
gcd criterion decides necessity and an explicit CRT construction settles the
odd-gcd case.  Classifying seeds for a query (d, theta) walks the realizable
orbits and matches theta against each twist coset of degree solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt

from .exact_arith import squarefree_decompose
from .helix_core import (
    NotApplicableError,
    Seed,
    Theta,
    big_D,
    theta as theta_of,
)
from .helix_ops import same_numerical_class, twist

__all__ = [
    "NoHelixError",
    "Realizability",
    "RankOrbit",
    "ClassEntry",
    "ClassReport",
    "normalize_rank_pair",
    "rank_solutions",
    "small_D_reduce",
    "realizable",
    "degree_construct",
    "theta_decompose",
    "classify_theta",
]


class NoHelixError(ValueError):
    """No helix exists for the requested (d, theta)."""


class Realizability(Enum):
    YES = "Yes"
    NO = "No"
    NECESSARY_HOLDS_UNDETERMINED = "NecessaryHoldsUndetermined"


def normalize_rank_pair(d: int, pair: tuple[int, int]) -> tuple[int, int]:
    """Canonical minimal representative of the shift orbit of a rank pair.

    Requires D(pair) > 0.  The result satisfies r_0 <= r_m1 <= (d-1)*r_0,
    with ties resolved to the rank pair (m, m).
    """
    x, y = pair
    if x <= 0 or y <= 0:
        raise ValueError("rank pair must be positive")
    if big_D(x, y, d) <= 0:
        raise ValueError("rank pair must satisfy D > 0")
    while x < y:
        x, y = d * x - y, x
    while d * y - x < y:
        x, y = y, d * y - x
    if d * y - x == y:
        x, y = y, d * y - x
    return x, y


@dataclass(frozen=True)
class RankOrbit:
    """A shift orbit of rank pairs for fixed (d, D)."""

    rep: tuple[int, int]
    gcd_bar: int
    dual_rep: tuple[int, int]

    @property
    def self_dual(self) -> bool:
        return self.rep == self.dual_rep


def rank_solutions(d: int, D: int) -> list[RankOrbit]:
    """All shift orbits of positive solutions of d*x*y - x^2 - y^2 = D.

    Enumerates the minimal r_0 values (bounded by D/r_0^2 >= d-2) and solves
    the quadratic in r_m1 over the minimality window; dual partners are
    linked via reversal.
    """
    if d <= 2:
        raise ValueError(f"rank solutions need d > 2, got {d}")
    if D <= 0:
        raise NoHelixError(f"no helix: D must be positive, got {D}")
    reps: set[tuple[int, int]] = set()
    r0 = 1
    while (d - 2) * r0 * r0 <= D:
        disc = (d * d - 4) * r0 * r0 - 4 * D
        if disc >= 0:
            root = isqrt(disc)
            if root * root == disc and (d * r0 + root) % 2 == 0:
                for x in {(d * r0 - root) // 2, (d * r0 + root) // 2}:
                    if r0 <= x <= (d - 1) * r0:
                        reps.add(normalize_rank_pair(d, (x, r0)))
        r0 += 1
    orbits = []
    for rep in sorted(reps):
        dual_rep = normalize_rank_pair(d, (rep[1], rep[0]))
        orbits.append(RankOrbit(rep, gcd(rep[0], rep[1]), dual_rep))
    return orbits


def small_D_reduce(d: int, D: int) -> list[int]:
    """Integers y with d*y - y^2 - 1 = D, valid for 0 < D < 4*(d-2).

    In this range every orbit is A^n(y, 1); solutions come in pairs
    {y, d-y} and their existence forces D >= d-2.
    """
    if d <= 2:
        raise ValueError(f"small-D reduction needs d > 2, got {d}")
    if not 0 < D < 4 * (d - 2):
        raise NotApplicableError(
            f"small-D reduction needs 0 < D < 4*(d-2) = {4 * (d - 2)}, got {D}"
        )
    disc = d * d - 4 * (D + 1)
    if disc < 0:
        return []
    root = isqrt(disc)
    if root * root != disc or (d + root) % 2 != 0:
        return []
    ys = sorted({(d - root) // 2, (d + root) // 2})
    if ys and D < d - 2:
        raise RuntimeError(f"solutions exist but D = {D} < d-2 = {d - 2}")
    return ys


def realizable(d: int, r_m1: int, r_0: int) -> Realizability:
    """Does a coordinate-wise coprime degree vector with determinant d exist?

    Necessary: gcd(r_m1, r_0) = gcd(r_m1, d) = gcd(r_0, d).  Sufficient when
    that common gcd is odd; the even case is undetermined (the construction
    breaks and no substitute criterion is known).
    """
    if r_m1 <= 0 or r_0 <= 0:
        raise ValueError("ranks must be positive")
    rbar = gcd(r_m1, r_0)
    if not rbar == gcd(r_m1, d) == gcd(r_0, d):
        return Realizability.NO
    if rbar % 2 == 1:
        return Realizability.YES
    return Realizability.NECESSARY_HOLDS_UNDETERMINED


def _bezout(a: int, b: int) -> tuple[int, int]:
    """(u, v) with u*a + v*b = gcd(a, b)."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    return old_u, old_v


def _prime_factors(n: int) -> list[int]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def _particular_degrees(d: int, r_m1: int, r_0: int) -> tuple[int, int]:
    """One integer degree vector with d_0*r_m1 - d_m1*r_0 = d (gcd(r) | d)."""
    rbar = gcd(r_m1, r_0)
    if d % rbar:
        raise ValueError(f"gcd of ranks ({rbar}) must divide d ({d})")
    u, v = _bezout(r_m1 // rbar, r_0 // rbar)
    d_prime = d // rbar
    return -v * d_prime, u * d_prime


def degree_construct(d: int, r_m1: int, r_0: int) -> Seed:
    """Build a seed with the given ranks, determinant d, and coprime coordinates.

    Extended Euclid on the reduced rank vector gives a particular solution;
    a CRT-chosen multiple of the reduced ranks dodges every prime of the
    rank gcd (each prime is odd, leaving a free residue per coordinate).
    """
    if realizable(d, r_m1, r_0) is not Realizability.YES:
        raise ValueError(
            f"ranks ({r_m1}, {r_0}) are not known realizable for d = {d}"
        )
    rbar = gcd(r_m1, r_0)
    rp_m1, rp_0 = r_m1 // rbar, r_0 // rbar
    pd_m1, pd_0 = _particular_degrees(d, r_m1, r_0)
    if rbar > 1:
        modulus, residue = 1, 0
        for p in _prime_factors(rbar):
            forbidden = set()
            for r_i, d_i in ((rp_m1, pd_m1), (rp_0, pd_0)):
                if r_i % p:
                    forbidden.add((-d_i * pow(r_i, -1, p)) % p)
            m_p = min(x for x in range(p) if x not in forbidden)
            # combine residue mod modulus with m_p mod p
            inv = pow(modulus, -1, p)
            residue += modulus * ((m_p - residue) * inv % p)
            modulus *= p
        pd_m1 += residue * rp_m1
        pd_0 += residue * rp_0
    seed = Seed(r_m1, r_0, pd_m1, pd_0)
    # deterministic small form: integer twist so that 0 <= d_0 < r_0
    return twist(seed, -(seed.d_0 // seed.r_0))


def theta_decompose(th: Theta, d: int) -> tuple[Fraction, Fraction, int]:
    """Rewrite a finite theta as a + b*sqrt(d^2-4) and recover D = -d/(2b).

    Raises NoHelixError when theta is rational, lives over the wrong
    radicand, has b >= 0 (slopes approach theta from above), or does not
    produce a positive integer D.
    """
    if d <= 2:
        raise ValueError(f"theta decomposition needs d > 2, got {d}")
    if th.is_neg_infinity:
        raise NoHelixError(f"theta is -inf but d = {d} > 2 forces a finite theta")
    q = th.value
    if q.b == 0:
        raise NoHelixError("no helix exists: theta must be irrational for d > 2")
    factor, core = squarefree_decompose(d * d - 4)
    if q.radicand != core:
        raise NoHelixError(
            f"no helix exists: theta lives over sqrt({q.radicand}), "
            f"not sqrt({d * d - 4})"
        )
    b_full = q.b / factor
    if b_full >= 0:
        raise NoHelixError(
            "no helix exists: slopes decrease to theta, so the irrational "
            "coefficient must be negative"
        )
    big_d = Fraction(-d, 2 * b_full)
    if big_d.denominator != 1 or big_d <= 0:
        raise NoHelixError(
            f"no helix exists: -d/(2b) = {big_d} is not a positive integer"
        )
    return q.a, b_full, int(big_d)


@dataclass(frozen=True)
class ClassEntry:
    """One numerical class: its theta-exact representative and provenance."""

    seed: Seed
    orbit: tuple[int, int]
    gcd_bar: int
    twist_coset: int

    def to_json(self) -> dict:
        return {
            "seed": self.seed.to_json(),
            "orbit": list(self.orbit),
            "gcd_bar": self.gcd_bar,
        }


@dataclass(frozen=True)
class ClassReport:
    """Numerical classes matching a (d, theta) query."""

    d: int
    theta: Theta
    big_d: int
    classes: tuple[ClassEntry, ...]
    warnings: tuple[str, ...] = ()

    @property
    def count(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "theta": self.theta.to_json(),
            "D": self.big_d,
            "classes": [entry.to_json() for entry in self.classes],
            "count": self.count,
            "warnings": list(self.warnings),
        }


def _rational_part(d: int, ranks: tuple[int, int], degs: tuple[int, int]) -> Fraction:
    r_m1, r_0 = ranks
    d_m1, d_0 = degs
    denom = 2 * (r_0 * r_0 + r_m1 * r_m1 - d * r_0 * r_m1)
    numer = 2 * (r_0 * d_0 + d_m1 * r_m1) - d * (r_0 * d_m1 + d_0 * r_m1)
    return Fraction(numer, denom)


def classify_theta(d: int, th: Theta) -> ClassReport:
    """Enumerate the numerical classes with hom dimension d and limit slope theta.

    For d = 2 there is a single class exactly when theta is -inf.  For d > 2
    the query fixes D; each realizable rank orbit contributes at most one
    class, found by matching theta's rational part against the orbit's
    gcd_bar twist cosets of degree solutions and filtering coordinate-wise
    coprimality.
    """
    if d < 2:
        raise ValueError(f"classification needs d >= 2, got {d}")
    if d == 2:
        if th.is_neg_infinity:
            entry = ClassEntry(Seed(1, 1, 0, 2), (1, 1), 1, 0)
            return ClassReport(2, th, 0, (entry,))
        return ClassReport(
            2, th, 0, (), ("d = 2 helices all have theta = -inf; none match",)
        )
    query_a, _, big_d = theta_decompose(th, d)
    warnings: list[str] = []
    entries: list[ClassEntry] = []
    for orbit in rank_solutions(d, big_d):
        status = realizable(d, *orbit.rep)
        if status is Realizability.NO:
            continue
        if status is Realizability.NECESSARY_HOLDS_UNDETERMINED:
            warnings.append(
                f"orbit {orbit.rep}: realizability undetermined "
                f"(gcd {orbit.gcd_bar} is even); excluded from the count"
            )
            continue
        r_m1, r_0 = orbit.rep
        rbar = orbit.gcd_bar
        rp_m1, rp_0 = r_m1 // rbar, r_0 // rbar
        pd_m1, pd_0 = _particular_degrees(d, r_m1, r_0)
        for t in range(rbar):
            degs = (pd_m1 + t * rp_m1, pd_0 + t * rp_0)
            offset = query_a - _rational_part(d, orbit.rep, degs)
            if offset.denominator != 1:
                continue
            candidate = twist(Seed(r_m1, r_0, *degs), int(offset))
            if gcd(candidate.r_m1, candidate.d_m1) != 1:
                continue
            if gcd(candidate.r_0, candidate.d_0) != 1:
                continue
            if theta_of(candidate) != th:
                raise RuntimeError(
                    f"internal error: rebuilt seed {candidate} misses theta {th}"
                )
            entries.append(ClassEntry(candidate, orbit.rep, rbar, t))
            break
    # distinct orbits can never coincide, but keep the exact decision as a guard
    deduped: list[ClassEntry] = []
    for entry in entries:
        if not any(
            same_numerical_class(entry.seed, kept.seed, allow_dual=False)
            for kept in deduped
        ):
            deduped.append(entry)
    deduped.sort(key=lambda e: (e.orbit, e.seed.degrees))
    return ClassReport(d, th, big_d, tuple(deduped), tuple(warnings))
