"""Regression corpus: worked results this library must keep reproducing.

Each case pins one expectation (a theta value, a class count, an
equivalence verdict, an ampleness check, or a table row) behind a stable
id.  Ids group by scenario: ``caseyis<y>-*`` covers the small-D family
where the minimal rank vector is (y, 1); ``largeD-*`` covers the D = 75
example that the small-D reduction cannot reach.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .ampleness import ample_two_periodic, limit_product, three_periodic_ample, three_periodic_seq
from .classify import classify_theta, rank_solutions, realizable, Realizability, small_D_reduce, degree_construct
from .exact_arith import QuadNum
from .helix_core import (
    Seed,
    Theta,
    VerdictKind,
    big_D,
    extendable,
    rank_deg_window,
    seed_det,
    theta,
)
from .helix_ops import same_numerical_class
from .hilbert import hilbert_table
from .quadform import to_diag, to_pell

__all__ = ["CorpusCase", "CaseResult", "build_corpus", "run_corpus"]


@dataclass(frozen=True)
class CorpusCase:
    id: str
    label: str
    check: Callable[[], str | None]  # None on pass, failure detail otherwise


@dataclass(frozen=True)
class CaseResult:
    case: CorpusCase
    passed: bool
    detail: str = ""


def _eq(actual, expected, what: str) -> str | None:
    if actual != expected:
        return f"{what}: expected {expected}, got {actual}"
    return None


def _first(*failures: str | None) -> str | None:
    for failure in failures:
        if failure is not None:
            return failure
    return None


# -- shared fixtures -------------------------------------------------------

SEED_Y2_A = Seed(2, 1, -3, 1)
SEED_Y2_B = Seed(3, 1, -5, 0)
SEED_Y3_A = Seed(3, 1, -7, 1)
SEED_Y3_B = Seed(7, 1, -17, -1)
SEED_BIG_A = Seed(4, 7, 9, 17)
SEED_BIG_B = Seed(5, 5, 11, 12)
SEED_D2 = Seed(1, 1, 0, 2)

THETA_Y2 = Theta.finite(QuadNum(Fraction(1, 2), Fraction(-1, 2), 21))
THETA_Y3 = Theta.finite(QuadNum(0, -1, 6))
THETA_BIG = Theta.finite(QuadNum(Fraction(23, 10), Fraction(-1, 30), 21))
THETA_Y1_D7 = Theta.finite(QuadNum(Fraction(7, 2), Fraction(-7, 10), 45))

CORPUS_SEEDS = [SEED_Y2_A, SEED_Y2_B, SEED_Y3_A, SEED_Y3_B, SEED_BIG_A, SEED_BIG_B]


# -- case checks -----------------------------------------------------------

def _theta_case(seed: Seed, expected: Theta) -> Callable[[], str | None]:
    return lambda: _eq(theta(seed), expected, f"theta of {seed.to_json()}")


def _det_values() -> str | None:
    return _first(
        _eq(seed_det(SEED_Y2_A), 5, "det of the (2,1) seed"),
        _eq(seed_det(SEED_D2), 2, "det of the unit-rank degree-step-2 seed"),
        _eq(seed_det(SEED_BIG_A), 5, "det of the (4,7) seed"),
    )


def _big_d_values() -> str | None:
    return _first(
        _eq(big_D(2, 1, 5), 5, "D(2,1) at d=5"),
        _eq(big_D(3, 1, 10), 20, "D(3,1) at d=10"),
        _eq(big_D(5, 5, 5), 75, "D(5,5) at d=5"),
    )


def _verdicts() -> str | None:
    return _first(
        _eq(extendable(SEED_D2).kind, VerdictKind.YES2, "unit-rank d=2 seed"),
        _eq(extendable(SEED_Y2_A).kind, VerdictKind.YES_GENERIC, "(2,1) seed"),
        _eq(extendable(Seed(1, 3, 0, 1)).kind, VerdictKind.NO, "d=1 seed"),
    )


def _d2_window() -> str | None:
    window = rank_deg_window(SEED_D2, -3, 3)
    expected = [(n, 1, 2 * n + 2) for n in range(-3, 4)]
    return _eq(window, expected, "d=2 window [-3, 3]")


def _classes(d: int, th: Theta, count: int, rep_seeds=None, orbits=None):
    def check() -> str | None:
        report = classify_theta(d, th)
        failure = _eq(report.count, count, f"class count for d={d}, theta={th}")
        if failure:
            return failure
        if rep_seeds is not None:
            got = {entry.seed for entry in report.classes}
            failure = _eq(got, set(rep_seeds), "class representatives")
            if failure:
                return failure
        if orbits is not None:
            got = {entry.orbit for entry in report.classes}
            failure = _eq(got, set(orbits), "class rank orbits")
            if failure:
                return failure
        return None

    return check


def _orbits(d: int, D: int, reps: list[tuple[int, int]], dual_pairs=None):
    def check() -> str | None:
        orbits = rank_solutions(d, D)
        failure = _eq([o.rep for o in orbits], reps, f"orbit reps for ({d}, {D})")
        if failure:
            return failure
        if dual_pairs is not None:
            got = {o.rep: o.dual_rep for o in orbits}
            return _eq(got, dual_pairs, f"dual links for ({d}, {D})")
        return None

    return check


def _reduce(d: int, D: int, ys: list[int]):
    return lambda: _eq(small_D_reduce(d, D), ys, f"small-D roots for ({d}, {D})")


def _equiv(s1: Seed, s2: Seed, allow_dual: bool, expect_equiv: bool, expect_dual=None):
    def check() -> str | None:
        witness = same_numerical_class(s1, s2, allow_dual=allow_dual)
        if expect_equiv:
            if witness is None:
                return "expected an equivalence witness, got none"
            if witness.apply(s1) != s2:
                return f"witness {witness.to_json()} does not carry s1 to s2"
            if expect_dual is not None and witness.used_dual != expect_dual:
                return f"expected used_dual={expect_dual}, got {witness.used_dual}"
        elif witness is not None:
            return f"expected distinct classes, got witness {witness.to_json()}"
        return None

    return check


def _realizability() -> str | None:
    return _first(
        _eq(realizable(5, 5, 5), Realizability.YES, "ranks (5,5) at d=5"),
        _eq(realizable(5, 2, 4), Realizability.NO, "ranks (2,4) at d=5"),
        _eq(
            realizable(6, 2, 2),
            Realizability.NECESSARY_HOLDS_UNDETERMINED,
            "ranks (2,2) at d=6",
        ),
    )


def _construct_5_5_5() -> str | None:
    seed = degree_construct(5, 5, 5)
    return _first(
        _eq(seed_det(seed), 5, "constructed determinant"),
        _eq(seed.ranks, (5, 5), "constructed ranks"),
        None if extendable(seed).kind is VerdictKind.YES_GENERIC else "not extendable",
        None if theta(seed).value is not None else "theta should be finite",
    )


def _ample_two_periodic_corpus() -> str | None:
    for seed in CORPUS_SEEDS:
        if not ample_two_periodic(seed):
            return f"determinant test failed for {seed.to_json()}"
        if limit_product(seed) <= 1:
            return f"limit product not above 1 for {seed.to_json()}"
    return None


def _three_periodic_initial() -> str | None:
    seq3 = three_periodic_seq(3, -2, 2)
    seq4 = three_periodic_seq(4, -2, 2)
    return _first(
        _eq((seq3.degree(-1), seq3.rank(-1)), (-3, 1), "d=3 back step one"),
        _eq((seq3.degree(-2), seq3.rank(-2)), (-6, 1), "d=3 back step two"),
        _eq((seq4.degree(2), seq4.rank(2)), (12, 2), "d=4 forward step two"),
    )


def _three_periodic_all() -> str | None:
    for d in range(3, 21):
        if not three_periodic_ample(d):
            return f"three-periodic ampleness failed at d={d}"
    return None


def _pell_examples() -> str | None:
    diag = to_diag(2, 1, 5)
    failure = _eq((diag.x, diag.y), (3, -1), "diag solution for (2,1,5)")
    if failure:
        return failure
    pell = to_pell(diag)
    failure = _eq((pell.X, pell.Y), (-84, 18), "pell lift of (3,-1)")
    if failure:
        return failure
    diag10 = to_diag(3, 1, 10)
    return _eq((diag10.x, diag10.y), (4, -2), "diag solution for (3,1,10)")


def _hilbert_rows() -> str | None:
    table = hilbert_table(SEED_Y2_A, 3)
    failure = _eq(
        [table.entry(0, j) for j in range(4)], [0, 5, 25, 120], "first row at d=5"
    )
    if failure:
        return failure
    table2 = hilbert_table(SEED_D2, 8)
    failure = _eq(
        [table2.entry(0, j) for j in range(9)],
        [2 * j for j in range(9)],
        "first row at d=2",
    )
    if failure:
        return failure
    for i in range(3):
        failure = _eq(table.entry(i, i + 1), 5, f"h({i},{i + 1})")
        if failure:
            return failure
    return None


def build_corpus() -> list[CorpusCase]:
    cases = [
        CorpusCase(
            "caseyis2-theta-a",
            "seed r=(2,1) deg=(-3,1) has theta = 1/2 - 1/2*sqrt(21)",
            _theta_case(SEED_Y2_A, THETA_Y2),
        ),
        CorpusCase(
            "caseyis2-theta-b",
            "seed r=(3,1) deg=(-5,0) has theta = 1/2 - 1/2*sqrt(21)",
            _theta_case(SEED_Y2_B, THETA_Y2),
        ),
        CorpusCase(
            "caseyis3-theta-a",
            "seed r=(3,1) deg=(-7,1) has theta = -sqrt(6)",
            _theta_case(SEED_Y3_A, THETA_Y3),
        ),
        CorpusCase(
            "caseyis3-theta-b",
            "seed r=(7,1) deg=(-17,-1) has theta = -sqrt(6)",
            _theta_case(SEED_Y3_B, THETA_Y3),
        ),
        CorpusCase(
            "largeD-theta-a",
            "seed r=(4,7) deg=(9,17) has theta = 23/10 - 1/30*sqrt(21)",
            _theta_case(SEED_BIG_A, THETA_BIG),
        ),
        CorpusCase(
            "largeD-theta-b",
            "seed r=(5,5) deg=(11,12) has theta = 23/10 - 1/30*sqrt(21)",
            _theta_case(SEED_BIG_B, THETA_BIG),
        ),
        CorpusCase("det-basic", "determinant values of the sample seeds", _det_values),
        CorpusCase("bigD-values", "D invariant values of the sample ranks", _big_d_values),
        CorpusCase("verdict-kinds", "extension verdicts across the three regimes", _verdicts),
        CorpusCase("d2-window", "d=2 sequence: unit ranks, degrees stepping by 2", _d2_window),
        CorpusCase(
            "caseyis2-classes",
            "d=5, theta=1/2-1/2*sqrt(21): two classes with known representatives",
            _classes(5, THETA_Y2, 2, rep_seeds=[SEED_Y2_A, SEED_Y2_B]),
        ),
        CorpusCase(
            "caseyis3-classes",
            "d=10, theta=-sqrt(6): two classes with known representatives",
            _classes(10, THETA_Y3, 2, rep_seeds=[SEED_Y3_A, SEED_Y3_B]),
        ),
        CorpusCase(
            "largeD-classes",
            "d=5, theta=23/10-1/30*sqrt(21): two classes, orbits (13,4) and (5,5)",
            _classes(5, THETA_BIG, 2, orbits=[(13, 4), (5, 5)]),
        ),
        CorpusCase(
            "caseyis1-classes",
            "d=7 with D=d-2: a single numerical class",
            _classes(7, THETA_Y1_D7, 1, orbits=[(1, 1)]),
        ),
        CorpusCase(
            "caseyis2-orbits",
            "rank orbits for (d,D)=(5,5) are (2,1) and (3,1), mutually dual",
            _orbits(5, 5, [(2, 1), (3, 1)], {(2, 1): (3, 1), (3, 1): (2, 1)}),
        ),
        CorpusCase(
            "caseyis3-orbits",
            "rank orbits for (d,D)=(10,20) are (3,1) and (7,1)",
            _orbits(10, 20, [(3, 1), (7, 1)], {(3, 1): (7, 1), (7, 1): (3, 1)}),
        ),
        CorpusCase(
            "caseyis1-orbits",
            "rank orbits for (d,D)=(3,1): the self-dual (1,1)",
            _orbits(3, 1, [(1, 1)], {(1, 1): (1, 1)}),
        ),
        CorpusCase(
            "largeD-orbits",
            "rank orbits for (d,D)=(5,75): (5,5), (7,4) and (13,4)",
            _orbits(5, 75, [(5, 5), (7, 4), (13, 4)]),
        ),
        CorpusCase(
            "caseyis2-reduce",
            "small-D reduction at (5,5) gives y in {2,3}",
            _reduce(5, 5, [2, 3]),
        ),
        CorpusCase(
            "caseyis4-reduce",
            "small-D reduction at (17,51) gives y in {4,13}",
            _reduce(17, 51, [4, 13]),
        ),
        CorpusCase(
            "caseyis2-distinct",
            "the two d=5 representatives are not shift-twist equivalent",
            _equiv(SEED_Y2_A, SEED_Y2_B, False, False),
        ),
        CorpusCase(
            "caseyis2-dual-equiv",
            "the two d=5 representatives coincide up to dual",
            _equiv(SEED_Y2_A, SEED_Y2_B, True, True, expect_dual=True),
        ),
        CorpusCase(
            "caseyis3-distinct",
            "the two d=10 representatives are not shift-twist equivalent",
            _equiv(SEED_Y3_A, SEED_Y3_B, False, False),
        ),
        CorpusCase(
            "caseyis3-dual-equiv",
            "the two d=10 representatives coincide up to dual",
            _equiv(SEED_Y3_A, SEED_Y3_B, True, True, expect_dual=True),
        ),
        CorpusCase(
            "largeD-distinct",
            "the two D=75 representatives stay distinct even up to dual",
            _equiv(SEED_BIG_A, SEED_BIG_B, True, False),
        ),
        CorpusCase("realize-gcd", "realizability across the three outcomes", _realizability),
        CorpusCase(
            "realize-construct",
            "degree construction for ranks (5,5) at d=5 yields a valid seed",
            _construct_5_5_5,
        ),
        CorpusCase(
            "ample-two-periodic",
            "every corpus seed passes the determinant test with margin above 1",
            _ample_two_periodic_corpus,
        ),
        CorpusCase(
            "threeper-initial",
            "three-periodic backward/forward initial data",
            _three_periodic_initial,
        ),
        CorpusCase(
            "threeper-ample",
            "three-periodic sequences are ample for d in [3, 20]",
            _three_periodic_all,
        ),
        CorpusCase("pell-values", "diagonal form and Pell lift on sample ranks", _pell_examples),
        CorpusCase("hilbert-rows", "dimension table rows at d=5 and d=2", _hilbert_rows),
    ]
    ids = [case.id for case in cases]
    if len(ids) != len(set(ids)):
        raise RuntimeError("corpus case ids must be unique")
    return cases


def run_corpus(filter_substring: str | None = None) -> list[CaseResult]:
    """Run all (or id-filtered) cases, in id order, deterministically."""
    results = []
    for case in sorted(build_corpus(), key=lambda c: c.id):
        if filter_substring and filter_substring not in case.id:
            continue
        try:
            detail = case.check()
        except Exception as exc:  # a crash is a failure, not an abort
            detail = f"raised {type(exc).__name__}: {exc}"
        results.append(CaseResult(case, detail is None, detail or ""))
    return results
