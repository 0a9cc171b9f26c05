"""Euler-form dimension tables for the coordinate algebra of a helix.

The (i, j) component of the algebra is spanned by maps from the term at
sequence index -j to the term at index -i, and for j > i its dimension is
the Euler form deg*rk' - deg'*rk of the two terms.  The diagonal of the
table reports the Euler characteristic 0, not the hom dimension 1: the
bilinear form vanishes there while endomorphism spaces stay 1-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass

from .helix_core import (
    NotExtendableError,
    Seed,
    extendable,
    rank_deg_window,
    seed_det,
)

__all__ = ["HilbertTable", "euler_form", "hilbert_table"]


def euler_form(s: Seed, i: int, j: int) -> int:
    """d_{-i}*r_{-j} - d_{-j}*r_{-i}: the antisymmetric Euler form.

    For j > i (slopes strictly increase with sequence index) this is the
    dimension of the (i, j) component of the algebra.
    """
    lo, hi = min(-i, -j), max(-i, -j)
    window = {n: (r_n, d_n) for n, r_n, d_n in rank_deg_window(s, lo, hi)}
    r_mi, d_mi = window[-i]
    r_mj, d_mj = window[-j]
    return d_mi * r_mj - d_mj * r_mi


@dataclass(frozen=True)
class HilbertTable:
    """Dimensions h(i, j) for 0 <= i <= j <= size, stored upper-triangular."""

    seed: Seed
    size: int
    rows: tuple[tuple[int, ...], ...]  # rows[i][j - i] = h(i, j)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i <= self.size and 0 <= j <= self.size):
            raise IndexError(f"indices must lie in [0, {self.size}]")
        if j >= i:
            return self.rows[i][j - i]
        return -self.rows[j][i - j]

    def matrix(self) -> list[list[int]]:
        """Full (size+1) x (size+1) antisymmetric matrix."""
        n = self.size + 1
        return [[self.entry(i, j) for j in range(n)] for i in range(n)]

    def to_json(self) -> dict:
        return {
            "seed": self.seed.to_json(),
            "size": self.size,
            "matrix": self.matrix(),
        }

    def to_csv(self) -> str:
        lines = [",".join(str(v) for v in row) for row in self.matrix()]
        return "\n".join(lines) + "\n"


def hilbert_table(s: Seed, size: int) -> HilbertTable:
    """Table of h(i, j) via the recurrence h(i, j+1) = d*h(i, j) - h(i, j-1)."""
    if size <= 0:
        raise ValueError(f"table size must be positive, got {size}")
    if not extendable(s).extends:
        raise NotExtendableError("hilbert table needs an extendable seed")
    d = seed_det(s)
    rows = []
    for i in range(size + 1):
        row = [0]
        if i < size:
            row.append(d)
        for j in range(i + 2, size + 1):
            row.append(d * row[-1] - row[-2])
        rows.append(tuple(row))
    table = HilbertTable(s, size, tuple(rows))
    for i in range(size):
        if table.entry(i, i + 1) != d:
            raise RuntimeError("h(i, i+1) must equal to d along the table")
        for j in range(i + 1, size + 1):
            if table.entry(i, j) <= 0:
                raise RuntimeError(f"h({i}, {j}) must be positive")
    return table
