"""Shift, twist, dual, minimality normalization, and class equivalence.

Shifting reindexes the sequence (theta, d, D invariant); twisting by an
integer a adds a*(ranks) to the degrees (theta goes up by a); dualizing
reverses the sequence with negated degrees (theta's rational part flips
sign).  Two seeds are in the same numerical class when a shift plus an
integer twist (optionally after dualizing) maps one onto the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .helix_core import (
    NotApplicableError,
    NotExtendableError,
    Seed,
    VerdictKind,
    extendable,
    seed_det,
)

__all__ = [
    "EquivWitness",
    "shift",
    "twist",
    "dual",
    "normalize",
    "same_numerical_class",
]


def shift(s: Seed, n: int) -> Seed:
    """Apply the recurrence matrix n times to both rank and degree vectors."""
    d = seed_det(s)
    r_x, r_y = s.r_m1, s.r_0
    d_x, d_y = s.d_m1, s.d_0
    for _ in range(n if n >= 0 else -n):
        if n >= 0:
            r_x, r_y = r_y, d * r_y - r_x
            d_x, d_y = d_y, d * d_y - d_x
        else:
            r_x, r_y = d * r_x - r_y, r_x
            d_x, d_y = d * d_x - d_y, d_x
    return Seed(r_x, r_y, d_x, d_y)


def twist(s: Seed, a: int) -> Seed:
    """Add a times the rank vector to the degree vector."""
    return Seed(s.r_m1, s.r_0, s.d_m1 + a * s.r_m1, s.d_0 + a * s.r_0)


def dual(s: Seed) -> Seed:
    """Reverse the sequence and negate degrees: ((r_0, r_m1), (-d_0, -d_m1))."""
    return Seed(s.r_0, s.r_m1, -s.d_0, -s.d_m1)


def normalize(s: Seed) -> tuple[Seed, int, bool]:
    """Shift so r_0 is the minimum of the rank sequence.

    Returns (normalized seed, applied shift, tie flag).  The output satisfies
    r_0 <= r_m1 <= (d-1)*r_0.  When the minimum is attained twice the two
    positions are adjacent; the representative with the smaller r_m1 (rank
    pair (m, m)) is canonical and the tie flag is set.
    """
    verdict = extendable(s)
    if verdict.kind is VerdictKind.YES2:
        raise NotApplicableError("normalization requires d > 2")
    if verdict.kind is not VerdictKind.YES_GENERIC:
        raise NotExtendableError(f"seed does not extend to a helix: {verdict}")
    d = seed_det(s)
    cur, n = s, 0
    while cur.r_m1 < cur.r_0:
        cur, n = shift(cur, -1), n - 1
    while d * cur.r_0 - cur.r_m1 < cur.r_0:
        cur, n = shift(cur, 1), n + 1
    if d * cur.r_0 - cur.r_m1 == cur.r_0:
        cur, n = shift(cur, 1), n + 1
    return cur, n, cur.r_m1 == cur.r_0


@dataclass(frozen=True)
class EquivWitness:
    """Shift/twist (and optional dual) carrying one seed onto another."""

    shift_n: int
    twist_a: int
    used_dual: bool = False

    def apply(self, s: Seed) -> Seed:
        base = dual(s) if self.used_dual else s
        return twist(shift(base, self.shift_n), self.twist_a)

    def to_json(self) -> dict:
        return {"shift": self.shift_n, "twist": self.twist_a, "dual": self.used_dual}


def _integer_twist_between(base: Seed, target: Seed) -> int | None:
    """Integer a with twist(base, a) == target, when ranks already agree."""
    diff_m1 = target.d_m1 - base.d_m1
    diff_0 = target.d_0 - base.d_0
    a, rem = divmod(diff_m1, base.r_m1)
    if rem != 0 or a * base.r_0 != diff_0:
        return None
    return a


def same_numerical_class(
    s1: Seed, s2: Seed, allow_dual: bool = False
) -> EquivWitness | None:
    """Decide numerical-class equivalence, returning a witness or None.

    Exact and terminating: normalizing pins the single canonical rank
    position of each seed, after which only an integer twist can remain.
    """
    v1, v2 = extendable(s1), extendable(s2)
    if not v1.extends or not v2.extends:
        raise NotExtendableError("both seeds must extend to helices")
    if seed_det(s1) != seed_det(s2):
        return None
    if v1.kind is VerdictKind.YES2:
        # all d = 2 helices are twists of one another
        witness = EquivWitness(0, s2.d_m1 - s1.d_m1, False)
        return witness if witness.apply(s1) == s2 else None
    t2, n2, _ = normalize(s2)
    t1, n1, _ = normalize(s1)
    if t1.ranks == t2.ranks:
        a = _integer_twist_between(t1, t2)
        if a is not None:
            return EquivWitness(n1 - n2, a, False)
    if allow_dual:
        td, nd, _ = normalize(dual(s1))
        if td.ranks == t2.ranks:
            a = _integer_twist_between(td, t2)
            if a is not None:
                return EquivWitness(nd - n2, a, True)
    return None
