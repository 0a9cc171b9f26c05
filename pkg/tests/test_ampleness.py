import random
from fractions import Fraction

import pytest

from helixnum import (
    NotApplicableError,
    NotExtendableError,
    QuadNum,
    Seed,
    ample_det_check,
    ample_two_periodic,
    limit_product,
    rank_deg_window,
    seed_det,
    theta,
    three_periodic_ample,
    three_periodic_seq,
)
from helixnum.corpus import CORPUS_SEEDS

from helpers import random_generic_seeds


def test_det_check_two_periodic():
    assert ample_det_check(Seed(2, 1, -3, 1), 5) is True  # 25 > 21


def test_det_check_three_periodic_rows():
    # rows (r_-1, d_-1) = (d-2, -d), (r_0, d_0) = (1, 0) at d = 4
    seed = Seed(2, 1, -4, 0)
    assert seed_det(seed) == 4
    assert ample_det_check(seed, 3) is True  # 16 > 5


def test_det_check_degenerate_determinant():
    seed = Seed(1, 1, 0, 1)
    assert seed_det(seed) == 1
    assert ample_det_check(seed, 3) is False  # 1 < 5


def test_det_check_requires_hyperbolic_parameter():
    with pytest.raises(ValueError):
        ample_det_check(Seed(2, 1, -3, 1), 2)


def test_limit_product_examples():
    assert limit_product(Seed(2, 1, -3, 1)) == QuadNum(0, Fraction(5, 21), 21)
    assert limit_product(Seed(1, 1, 0, 3)) == QuadNum(0, Fraction(3, 5), 5)
    for seed in random_generic_seeds(30):
        assert limit_product(seed) > 1


def test_limit_product_preconditions():
    with pytest.raises(NotApplicableError):
        limit_product(Seed(1, 1, 0, 2))
    with pytest.raises(NotExtendableError):
        limit_product(Seed(5, 1, 0, 1))


def test_ample_two_periodic_on_corpus():
    for seed in CORPUS_SEEDS:
        assert ample_two_periodic(seed) is True
    with pytest.raises(NotExtendableError):
        ample_two_periodic(Seed(1, 3, 0, 1))


def test_finite_window_product_decreases_to_the_limit():
    rng = random.Random(606)
    for seed in random_generic_seeds(50, rng):
        th = theta(seed).value
        limit = limit_product(seed)
        window = {n: (r, deg) for n, r, deg in rank_deg_window(seed, -40, -10)}
        previous_gap = None
        for n in range(-10, -41, -1):
            r_n, d_n = window[n]
            value = QuadNum(r_n * d_n) - th * (r_n * r_n)
            gap = value - limit
            if gap.sign() < 0:
                gap = -gap
            if previous_gap is not None:
                assert (previous_gap - gap).sign() == 1
            previous_gap = gap


def test_slope_hypotheses_on_corpus():
    for seed in CORPUS_SEEDS:
        th = theta(seed).value
        window = rank_deg_window(seed, -40, 40)
        slopes = [Fraction(deg, r) for _, r, deg in window]
        assert all((QuadNum(mu) - th).sign() == 1 for mu in slopes)
        assert all(a < b for a, b in zip(slopes, slopes[1:]))


def test_three_periodic_initial_data():
    seq = three_periodic_seq(3, -2, 2)
    assert (seq.degree(-1), seq.rank(-1)) == (-3, 1)
    assert (seq.degree(-2), seq.rank(-2)) == (-6, 1)
    seq4 = three_periodic_seq(4, -2, 2)
    assert (seq4.degree(2), seq4.rank(2)) == (12, 2)
    assert (seq4.degree(-1), seq4.rank(-1)) == (-4, 2)
    assert (seq4.degree(-2), seq4.rank(-2)) == (-12, 5)


def test_three_periodic_forward_backward_consistency():
    for d in range(3, 12):
        seq = three_periodic_seq(d, -2, 2)
        for pick in (seq.rank, seq.degree):
            a = [pick(n) for n in range(-2, 3)]
            # regenerate n = 0..2 from n = -2..0 by running forward
            assert a[3] == d * a[2] - d * a[1] + a[0]
            assert a[4] == d * a[3] - d * a[2] + a[1]


def test_three_periodic_positive_ranks():
    for d in range(3, 21):
        seq = three_periodic_seq(d, -30, 30)
        assert all(r > 0 for _, r, _ in seq.entries)


def test_three_periodic_ample_all_d():
    for d in range(3, 21):
        assert three_periodic_ample(d) is True


def test_three_periodic_cross_product_identity():
    for d in range(3, 21):
        seq = three_periodic_seq(d, -2, 0)
        u = (seq.degree(0), seq.degree(-1), seq.degree(-2))
        v = (seq.rank(0), seq.rank(-1), seq.rank(-2))
        cross = (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        )
        assert cross == (d, d * (1 - d), d)


def test_three_periodic_rejects_small_d():
    with pytest.raises(ValueError):
        three_periodic_seq(2)
