"""Command-line surface: validate, seq, theta, classify, equiv, ample,
hilbert, pell, corpus.

All numeric output is exact (ints and "p/q" strings); ``--approx K`` adds
K-digit decimal renderings for human inspection.  Output is deterministic:
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .ampleness import limit_product, three_periodic_ample, three_periodic_seq
from .classify import NoHelixError, classify_theta
from .exact_arith import QuadNum
from .helix_core import (
    NonPositiveRankError,
    NotExtendableError,
    Seed,
    Theta,
    VerdictKind,
    big_D,
    extendable,
    rank_deg_window,
    seed_det,
    theta,
)
from .helix_ops import normalize, same_numerical_class
from .hilbert import hilbert_table
from .quadform import to_diag, to_pell
from .corpus import run_corpus

__all__ = ["main", "parse_theta"]


class CliError(Exception):
    """Input problem; maps to exit code 2."""


_THETA_RE = re.compile(
    r"^(?P<rat>[+-]?\d+(?:/\d+)?)?"
    r"(?:(?P<sign>[+-])?(?:(?P<coef>\d+(?:/\d+)?)\*)?sqrt\((?P<rad>\d+)\))?$"
)


def parse_theta(text: str) -> Theta:
    """Parse ``[sign] p[/q] [sign p[/q] * sqrt(N)]`` or ``-inf``."""
    compact = "".join(text.split())
    if compact.lower() in ("-inf", "-infinity"):
        return Theta.neg_infinity()
    match = _THETA_RE.match(compact)
    if not match or not compact:
        raise CliError(f"cannot parse theta {text!r}")
    rat, sign, coef, rad = match.group("rat", "sign", "coef", "rad")
    if rat is None and rad is None:
        raise CliError(f"cannot parse theta {text!r}")
    if rat is not None and rad is not None and sign is None:
        raise CliError(f"theta {text!r} needs a sign between the two terms")
    a = Fraction(rat) if rat is not None else Fraction(0)
    if rad is None:
        return Theta.finite(QuadNum(a))
    b = Fraction(coef) if coef is not None else Fraction(1)
    if sign == "-":
        b = -b
    return Theta.finite(QuadNum(a, b, int(rad)))


def _load_seed(path: str) -> Seed:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise CliError(f"cannot read seed file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON in {path}: {exc}") from exc
    try:
        return Seed.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"invalid seed in {path}: {exc}") from exc


def _emit(args, lines, payload) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _seed_text(seed: Seed) -> str:
    return f"r=[{seed.r_m1}, {seed.r_0}] deg=[{seed.d_m1}, {seed.d_0}]"


def _theta_payload(args, th: Theta) -> dict:
    payload = th.to_json()
    if args.approx and th.value is not None:
        payload["approx"] = th.value.decimal(args.approx)
    return payload


# -- commands ---------------------------------------------------------------

def _cmd_validate(args) -> int:
    seed = _load_seed(args.seed_file)
    verdict = extendable(seed)
    d = seed_det(seed)
    payload = {
        "verdict": verdict.kind.value,
        "reason": verdict.reason.value if verdict.reason else None,
        "d": d,
        "D": big_D(seed.r_m1, seed.r_0, d),
        "theta": None,
        "normalized": None,
    }
    lines = [f"verdict: {verdict}", f"d: {d}", f"D: {payload['D']}"]
    if verdict.extends:
        th = theta(seed)
        payload["theta"] = _theta_payload(args, th)
        lines.append(f"theta: {th}")
        if args.approx and th.value is not None:
            lines.append(f"theta ~ {th.value.decimal(args.approx)}")
        if verdict.kind is VerdictKind.YES_GENERIC:
            norm, shift_n, tie = normalize(seed)
        else:
            norm, shift_n, tie = seed, 0, True
        payload["normalized"] = norm.to_json()
        payload["shift"] = shift_n
        payload["tie"] = tie
        lines.append(
            f"normalized: {_seed_text(norm)} (shift {shift_n}, tie {'yes' if tie else 'no'})"
        )
    _emit(args, lines, payload)
    return 0 if verdict.extends else 1


def _cmd_seq(args) -> int:
    seed = _load_seed(args.seed_file)
    window = rank_deg_window(seed, args.n_min, args.n_max)
    payload = {
        "seed": seed.to_json(),
        "window": [{"n": n, "r": r, "deg": deg} for n, r, deg in window],
    }
    lines = [f"{'n':>5} {'rank':>12} {'degree':>12}"]
    lines += [f"{n:>5} {r:>12} {deg:>12}" for n, r, deg in window]
    _emit(args, lines, payload)
    return 0


def _cmd_theta(args) -> int:
    seed = _load_seed(args.seed_file)
    if not extendable(seed).extends:
        verdict = extendable(seed)
        _emit(
            args,
            [f"seed does not extend to a helix: {verdict}"],
            {"error": str(verdict)},
        )
        return 1
    th = theta(seed)
    lines = [f"theta: {th}"]
    if args.approx and th.value is not None:
        lines.append(f"theta ~ {th.value.decimal(args.approx)}")
    _emit(args, lines, _theta_payload(args, th))
    return 0


def _cmd_classify(args) -> int:
    th = parse_theta(args.theta)
    try:
        report = classify_theta(args.d, th)
    except NoHelixError as exc:
        raise CliError(str(exc)) from exc
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    payload = report.to_json()
    if args.approx and th.value is not None:
        payload["theta"]["approx"] = th.value.decimal(args.approx)
    lines = [
        f"d: {report.d}",
        f"theta: {report.theta}",
        f"D: {report.big_d}",
        f"count: {report.count}",
    ]
    for entry in report.classes:
        lines.append(
            f"class: {_seed_text(entry.seed)} "
            f"[orbit ({entry.orbit[0]}, {entry.orbit[1]}), gcd {entry.gcd_bar}, "
            f"coset {entry.twist_coset}]"
        )
    for warning in report.warnings:
        lines.append(f"warning: {warning}")
    _emit(args, lines, payload)
    return 0


def _cmd_equiv(args) -> int:
    s1 = _load_seed(args.seed_file_1)
    s2 = _load_seed(args.seed_file_2)
    try:
        witness = same_numerical_class(s1, s2, allow_dual=args.allow_dual)
    except NotExtendableError as exc:
        raise CliError(str(exc)) from exc
    if witness is None:
        note = ""
        if seed_det(s1) != seed_det(s2):
            note = f" (determinants differ: {seed_det(s1)} vs {seed_det(s2)})"
        _emit(args, [f"distinct{note}"], {"witness": None})
        return 1
    _emit(
        args,
        [
            "equivalent: shift {shift}, twist {twist}, dual {dual}".format(
                shift=witness.shift_n,
                twist=witness.twist_a,
                dual="yes" if witness.used_dual else "no",
            )
        ],
        {"witness": witness.to_json()},
    )
    return 0


def _cmd_ample(args) -> int:
    if args.three_periodic is not None:
        d = args.three_periodic
        ok = three_periodic_ample(d)
        window = three_periodic_seq(d, -2, 2)
        payload = {
            "three_periodic": d,
            "ample": ok,
            "window": [{"n": n, "r": r, "deg": deg} for n, r, deg in window.entries],
        }
        _emit(args, [f"three-periodic d={d}: ample {'yes' if ok else 'no'}"], payload)
        return 0 if ok else 1
    if args.seed_file is None:
        raise CliError("ample needs a seed file or --three-periodic d")
    seed = _load_seed(args.seed_file)
    verdict = extendable(seed)
    if verdict.kind is not VerdictKind.YES_GENERIC:
        raise CliError(f"ampleness test needs a d > 2 helix seed, got {verdict}")
    product = limit_product(seed)
    payload = {
        "ample": True,
        "det": seed_det(seed),
        "limit_product": product.to_json(),
        "exceeds_one": product > 1,
    }
    lines = [
        "ample: yes",
        f"limit product: {product} (> 1: {'yes' if product > 1 else 'no'})",
    ]
    if args.approx:
        payload["limit_product"]["approx"] = product.decimal(args.approx)
        lines.append(f"limit product ~ {product.decimal(args.approx)}")
    _emit(args, lines, payload)
    return 0


def _cmd_hilbert(args) -> int:
    seed = _load_seed(args.seed_file)
    try:
        table = hilbert_table(seed, args.size)
    except (NotExtendableError, ValueError) as exc:
        raise CliError(str(exc)) from exc
    if args.json:
        print(json.dumps(table.to_json()))
    else:
        sys.stdout.write(table.to_csv())
    return 0


def _cmd_pell(args) -> int:
    seed = _load_seed(args.seed_file)
    try:
        diag = to_diag(seed.r_m1, seed.r_0, seed_det(seed))
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    pell = to_pell(diag)
    payload = {"diag": diag.to_json(), "pell": pell.to_json()}
    _emit(
        args,
        [
            f"diag: x={diag.x} y={diag.y} d={diag.d} D={diag.big_d}",
            f"pell: X={pell.X} Y={pell.Y} d={pell.d} D={pell.big_d}",
        ],
        payload,
    )
    return 0


def _cmd_corpus(args) -> int:
    results = run_corpus(args.filter)
    payload = {
        "results": [
            {"id": r.case.id, "label": r.case.label, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
        "passed": sum(r.passed for r in results),
        "failed": sum(not r.passed for r in results),
    }
    lines = []
    for r in results:
        if r.passed:
            lines.append(f"[PASS] {r.case.id}: {r.case.label}")
        else:
            lines.append(f"[FAIL] {r.case.id}: {r.case.label} -- {r.detail}")
    lines.append(f"{payload['passed']} passed, {payload['failed']} failed")
    _emit(args, lines, payload)
    return 1 if payload["failed"] else 0


def _output_flags(parser: argparse.ArgumentParser, root: bool) -> None:
    # registered on the root and on every subcommand so the flags may appear
    # on either side; SUPPRESS keeps subcommand parsing from clobbering
    # values already set at the root
    parser.add_argument(
        "--json",
        action="store_true",
        default=False if root else argparse.SUPPRESS,
        help="emit JSON instead of text",
    )
    parser.add_argument(
        "--approx",
        type=int,
        metavar="K",
        default=0 if root else argparse.SUPPRESS,
        help="add K-digit decimal renderings (display only)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="helixnum",
        description="Exact numerics of two-periodic elliptic helices.",
    )
    _output_flags(parser, root=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="verdict, d, D, theta, normalized form")
    p.add_argument("seed_file")
    _output_flags(p, root=False)
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("seq", help="exact rank/degree window")
    p.add_argument("seed_file")
    p.add_argument("--from", dest="n_min", type=int, default=-40)
    p.add_argument("--to", dest="n_max", type=int, default=40)
    _output_flags(p, root=False)
    p.set_defaults(handler=_cmd_seq)

    p = sub.add_parser("theta", help="negative limit slope of a seed")
    p.add_argument("seed_file")
    _output_flags(p, root=False)
    p.set_defaults(handler=_cmd_theta)

    p = sub.add_parser("classify", help="numerical classes for (d, theta)")
    p.add_argument("d", type=int)
    p.add_argument("theta", help='e.g. "1/2 - 1/2*sqrt(21)" or "-inf"')
    _output_flags(p, root=False)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("equiv", help="decide shift/twist(/dual) equivalence")
    p.add_argument("seed_file_1")
    p.add_argument("seed_file_2")
    p.add_argument("--allow-dual", action="store_true")
    _output_flags(p, root=False)
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("ample", help="ampleness determinant test and limit product")
    p.add_argument("seed_file", nargs="?")
    p.add_argument("--three-periodic", type=int, metavar="D", default=None)
    _output_flags(p, root=False)
    p.set_defaults(handler=_cmd_ample)

    p = sub.add_parser("hilbert", help="Euler-form dimension table")
    p.add_argument("--seed", dest="seed_file", required=True)
    p.add_argument("--size", type=int, required=True)
    _output_flags(p, root=False)
    p.set_defaults(handler=_cmd_hilbert)

    p = sub.add_parser("pell", help="diagonal form and Pell-associate solutions")
    p.add_argument("seed_file")
    _output_flags(p, root=False)
    p.set_defaults(handler=_cmd_pell)

    p = sub.add_parser("corpus", help="run the regression corpus")
    p.add_argument("--filter", default=None, help="only run case ids containing this")
    _output_flags(p, root=False)
    p.set_defaults(handler=_cmd_corpus)

    return parser


def _guard_leading_dash(argv: list[str]) -> list[str]:
    """Insert "--" after the classify subcommand so negative theta strings
    like "-sqrt(6)" parse as positionals."""
    if "--" in argv or any(tok in ("-h", "--help") for tok in argv):
        return argv
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--json":
            i += 1
        elif tok == "--approx":
            i += 2
        elif tok.startswith("--approx="):
            i += 1
        else:
            if tok == "classify":
                return argv[: i + 1] + ["--"] + argv[i + 1 :]
            return argv
    return argv


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = _build_parser().parse_args(_guard_leading_dash(argv))
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NonPositiveRankError, NotExtendableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
