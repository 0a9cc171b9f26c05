"""Diagonalized quadratic form and Pell-associate transforms, verification-only.

Rank pairs map to solutions of (d-2)x^2 - (d+2)y^2 = 4D via
(x, y) = (r_m1 + r_0, r_0 - r_m1), and those map on to solutions of
X^2 - 4(d^2-4)Y^2 = -64(d^2-4)(d-2)D via X = 4(d^2-4)y, Y = 2(d-2)x.
Both constructors re-verify their invariant; no fundamental-solution
search is performed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .helix_core import big_D

__all__ = ["ConsistencyError", "DiagSolution", "PellSolution", "to_diag", "to_pell"]


class ConsistencyError(RuntimeError):
    """An invariant that must hold by construction failed."""


@dataclass(frozen=True)
class DiagSolution:
    """Solution of (d-2)*x^2 - (d+2)*y^2 = 4*D."""

    x: int
    y: int
    d: int
    big_d: int

    def __post_init__(self):
        lhs = (self.d - 2) * self.x * self.x - (self.d + 2) * self.y * self.y
        if lhs != 4 * self.big_d:
            raise ConsistencyError(
                f"(d-2)x^2-(d+2)y^2 = {lhs} != 4D = {4 * self.big_d}"
            )

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y, "d": self.d, "D": self.big_d}


@dataclass(frozen=True)
class PellSolution:
    """Solution of X^2 - 4(d^2-4)*Y^2 = -64(d^2-4)(d-2)*D."""

    X: int
    Y: int
    d: int
    big_d: int

    def __post_init__(self):
        disc = self.d * self.d - 4
        lhs = self.X * self.X - 4 * disc * self.Y * self.Y
        rhs = -64 * disc * (self.d - 2) * self.big_d
        if lhs != rhs:
            raise ConsistencyError(f"X^2-4(d^2-4)Y^2 = {lhs} != {rhs}")

    def to_json(self) -> dict:
        return {"X": self.X, "Y": self.Y, "d": self.d, "D": self.big_d}


def to_diag(r_m1: int, r_0: int, d: int) -> DiagSolution:
    """Map a rank pair to (x, y) = (r_m1 + r_0, r_0 - r_m1); requires D > 0."""
    D = big_D(r_m1, r_0, d)
    if D <= 0:
        raise ValueError(f"rank pair needs D > 0, got D = {D}")
    return DiagSolution(r_m1 + r_0, r_0 - r_m1, d, D)


def to_pell(s: DiagSolution) -> PellSolution:
    """Lagrange substitution X = 4(d^2-4)*y, Y = 2(d-2)*x."""
    disc = s.d * s.d - 4
    return PellSolution(4 * disc * s.y, 2 * (s.d - 2) * s.x, s.d, s.big_d)
