"""Shared test utilities: independent oracles and sample generators.

The oracles here deliberately avoid the library's own sequence code paths:
matrix powers are multiplied out explicitly and positivity is checked by
direct iteration, so they can arbitrate what the library computes.
"""

from __future__ import annotations

import random
from math import gcd

from helixnum import Seed, VerdictKind, extendable


def matrix_mul(m1, m2):
    return (
        (
            m1[0][0] * m2[0][0] + m1[0][1] * m2[1][0],
            m1[0][0] * m2[0][1] + m1[0][1] * m2[1][1],
        ),
        (
            m1[1][0] * m2[0][0] + m1[1][1] * m2[1][0],
            m1[1][0] * m2[0][1] + m1[1][1] * m2[1][1],
        ),
    )


def matrix_power(m, n):
    if n < 0:
        raise ValueError("use the explicit inverse for negative powers")
    result = ((1, 0), (0, 1))
    for _ in range(n):
        result = matrix_mul(result, m)
    return result


def oracle_pair(v_m1, v_0, d, n):
    """(v_{n-1}, v_n) via an explicit matrix power of A or its inverse."""
    if n >= 0:
        m = matrix_power(((0, 1), (-1, d)), n)
    else:
        m = matrix_power(((d, -1), (1, 0)), -n)
    return (
        m[0][0] * v_m1 + m[0][1] * v_0,
        m[1][0] * v_m1 + m[1][1] * v_0,
    )


def ranks_stay_positive(r_m1, r_0, d, bound):
    """Brute-force positivity of the rank sequence on |n| <= bound."""
    x, y = r_m1, r_0
    for _ in range(bound):
        x, y = y, d * y - x
        if y <= 0:
            return False
    x, y = r_m1, r_0
    for _ in range(bound):
        x, y = d * x - y, x
        if x <= 0:
            return False
    return True


def random_generic_seeds(count, rng=None, rank_max=12, deg_max=12):
    """Rejection-sample seeds with extendable(...) == YesGeneric."""
    rng = rng or random.Random(20210)
    seeds = []
    while len(seeds) < count:
        seed = Seed(
            rng.randint(1, rank_max),
            rng.randint(1, rank_max),
            rng.randint(-deg_max, deg_max),
            rng.randint(-deg_max, deg_max),
        )
        if extendable(seed).kind is VerdictKind.YES_GENERIC:
            seeds.append(seed)
    return seeds


def coprime_seed_space(rank_max, deg_max):
    """All slope-ordered seeds with coordinate-wise coprime (rank, degree)
    pairs in the box; these are the seeds whose two terms are numerically
    simple, the regime where the extension verdict is exact."""
    for r_m1 in range(1, rank_max + 1):
        for d_m1 in range(-deg_max, deg_max + 1):
            if gcd(r_m1, d_m1) != 1:
                continue
            for r_0 in range(1, rank_max + 1):
                for d_0 in range(-deg_max, deg_max + 1):
                    if d_m1 * r_0 >= d_0 * r_m1:
                        continue
                    if gcd(r_0, d_0) != 1:
                        continue
                    yield r_m1, r_0, d_m1, d_0
