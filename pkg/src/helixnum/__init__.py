"""Exact numerics of two-periodic elliptic helices.

Seeds (two consecutive rank/degree pairs) drive everything: validation,
bidirectional sequences, the invariants d and D, the negative limit slope
theta, shift/twist/dual operations, classification of numerical classes for
a given (d, theta), ampleness tests, and Euler-form dimension tables.  All
arithmetic is exact.
"""

from .exact_arith import (
    IncompatibleRadicandsError,
    QuadNum,
    Rat,
    canonicalize,
    quad_add,
    quad_inv,
    quad_mul,
    quad_neg,
    quad_sign,
    rat_from_str,
    rat_to_str,
    squarefree_decompose,
)
from .helix_core import (
    ExtendVerdict,
    NonPositiveRankError,
    NotApplicableError,
    NotExtendableError,
    RejectReason,
    Seed,
    SpectralData,
    Theta,
    VerdictKind,
    big_D,
    coprimality_violations,
    extendable,
    rank_deg_window,
    seed_det,
    spectral,
    theta,
)
from .helix_ops import EquivWitness, dual, normalize, same_numerical_class, shift, twist
from .classify import (
    ClassEntry,
    ClassReport,
    NoHelixError,
    Realizability,
    RankOrbit,
    classify_theta,
    degree_construct,
    normalize_rank_pair,
    rank_solutions,
    realizable,
    small_D_reduce,
    theta_decompose,
)
from .quadform import ConsistencyError, DiagSolution, PellSolution, to_diag, to_pell
from .ampleness import (
    ThreePeriodicSeq,
    ample_det_check,
    ample_two_periodic,
    limit_product,
    three_periodic_ample,
    three_periodic_seq,
)
from .hilbert import HilbertTable, euler_form, hilbert_table

__version__ = "0.1.0"

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
    "EquivWitness",
    "shift",
    "twist",
    "dual",
    "normalize",
    "same_numerical_class",
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
    "ConsistencyError",
    "DiagSolution",
    "PellSolution",
    "to_diag",
    "to_pell",
    "ThreePeriodicSeq",
    "ample_det_check",
    "ample_two_periodic",
    "limit_product",
    "three_periodic_seq",
    "three_periodic_ample",
    "HilbertTable",
    "euler_form",
    "hilbert_table",
]
