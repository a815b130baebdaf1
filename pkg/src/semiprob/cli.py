"""Command-line interface.

Exit codes: 0 success or verified, 1 counterexample found, 2 input or usage
error.  Reports are JSON on standard output.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .congruences import Congruence, sigma_tower
from .constructions import (
    Construct2Spec,
    Construct3Spec,
    build_a_k,
    build_a_mk,
    build_construct2,
    build_construct3,
)
from .core import idempotents
from .enumeration import CHECKS, count_semigroups, enumerate_semigroups, verify_theorem
from .errors import SemigroupError, SizeMismatch
from .relations import commuting_probability, probability_of_partition
from .rightrep import is_left_reductive, p_theta, theta
from .structure import (
    is_left_cancellative,
    is_left_zero,
    is_nilpotent,
    is_null,
    is_right_zero,
    zero_element,
)
from .tablefile import format_table, parse_partition, parse_table

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(SemigroupError):
    kind = "UsageError"


def rational(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator, "decimal": f"{float(q):.6g}"}


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _ints_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load_partition(path, S):
    p = parse_partition(_read(path))
    if p.size != S.order:
        raise SizeMismatch(f"partition has {p.size} labels, semigroup has order {S.order}")
    return p


def cmd_check(args):
    S = parse_table(_read(args.path))
    zero = zero_element(S)
    _emit({
        "command": "check",
        "inputs": {"path": args.path},
        "valid": True,
        "order": S.order,
        "predicates": {
            "left_reductive": is_left_reductive(S),
            "left_cancellative": is_left_cancellative(S),
            "left_zero": is_left_zero(S),
            "right_zero": is_right_zero(S),
            "null": is_null(S),
            "nilpotent": is_nilpotent(S),
        },
        "zero": zero,
        "idempotents": sorted(idempotents(S)),
        "idempotent_count": len(idempotents(S)),
    })
    return EXIT_OK


def cmd_prob(args):
    S = parse_table(_read(args.path))
    report = {"command": "prob", "inputs": {"path": args.path}}
    if args.partition:
        p = _load_partition(args.partition, S)
        report["inputs"].update(relation="partition", partition=args.partition)
        report["probability"] = rational(probability_of_partition(p))
        report["blocks"] = p.blocks()
    elif args.relation == "commuting":
        report["inputs"]["relation"] = "commuting"
        report["probability"] = rational(commuting_probability(S))
    else:
        report["inputs"]["relation"] = "theta"
        report["probability"] = rational(p_theta(S))
        report["blocks"] = theta(S).blocks()
    _emit(report)
    return EXIT_OK


def cmd_tower(args):
    S = parse_table(_read(args.path))
    if args.sigma:
        sigma = Congruence(S, _load_partition(args.sigma, S))
    else:
        sigma = Congruence.identity(S)
    tower = sigma_tower(S, sigma)
    _emit({
        "command": "tower",
        "inputs": {"path": args.path, "sigma": args.sigma or "identity"},
        "tower": [c.partition.blocks() for c in tower],
        "length": len(tower),
        "reached_universal": tower[-1].partition.is_universal(),
    })
    return EXIT_OK


def cmd_gen(args):
    if args.kind == "construct2":
        if args.sizes is None:
            raise UsageError("construct2 needs --sizes")
        S = build_construct2(Construct2Spec(len(args.sizes), args.sizes, args.stars))
    elif args.kind == "construct3":
        if args.l is None or args.phi is None:
            raise UsageError("construct3 needs --l and --phi")
        extra = args.extra if args.extra is not None else len(args.phi) - args.l
        S = build_construct3(Construct3Spec(args.l, extra, args.phi))
    else:
        if args.m is None or args.k is None:
            raise UsageError(f"{args.kind} needs --m and --k")
        S = (build_a_mk if args.kind == "a-mk" else build_a_k)(args.m, args.k)
    sys.stdout.write(format_table(S))
    return EXIT_OK


def _report_dict(rep) -> dict:
    out = {
        "check": rep.check,
        "passed": rep.passed,
        "max_order": rep.order,
        "count": rep.count,
        "population": {str(k): v for k, v in rep.population.items()},
        "counterexamples": rep.counterexamples,
    }
    if rep.rows:
        out["rows"] = [{"m": m, "k": k, "p": rational(p)} for m, k, p in rep.rows]
    return out


def cmd_verify(args):
    if args.all == (args.check is not None):
        raise UsageError("give exactly one check id or --all")
    ids = list(CHECKS) if args.all else [args.check.upper()]
    bounds = dict(max_order=args.max_order, max_size=args.max_size, max_m=args.m, max_k=args.k)
    reports = [
        verify_theorem(c, jobs=args.jobs, allow_large=args.allow_order_5, **bounds) for c in ids
    ]
    if args.format == "csv":
        if len(reports) != 1 or not reports[0].rows:
            raise UsageError("--format csv applies to the family sweeps T2 and T3")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "k", "num", "den", "decimal"])
        for m, k, p in reports[0].rows:
            writer.writerow([m, k, p.numerator, p.denominator, f"{float(p):.6g}"])
        sys.stdout.write(buf.getvalue())
    else:
        _emit({
            "command": "verify",
            "inputs": {"checks": ids, **{k: v for k, v in bounds.items() if v is not None}},
            "passed": all(r.passed for r in reports),
            "reports": [_report_dict(r) for r in reports],
        })
    return EXIT_OK if all(r.passed for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_enumerate(args):
    if args.count_only:
        count = count_semigroups(args.n, jobs=args.jobs, allow_large=args.allow_order_5)
        _emit({"command": "enumerate", "inputs": {"n": args.n}, "count": count})
        return EXIT_OK
    first = True
    for S in enumerate_semigroups(args.n, jobs=args.jobs, allow_large=args.allow_order_5):
        if not first:
            sys.stdout.write("\n")
        sys.stdout.write(format_table(S))
        first = False
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semiprob",
        description="Pair probabilities, congruence towers and constructions for finite semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a table file and summarize its structure")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("prob", help="exact probability that a random pair is related")
    p.add_argument("path")
    p.add_argument("--relation", choices=["theta", "commuting"], default="theta")
    p.add_argument("--partition", help="partition file; overrides --relation")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("tower", help="the tower sigma, sigma^(1), ... up to its fixpoint")
    p.add_argument("path")
    p.add_argument("--sigma", help="partition file for sigma (default: identity)")
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("gen", help="emit a constructed semigroup as a table file")
    p.add_argument("kind", choices=["construct2", "construct3", "a-mk", "a-k"])
    p.add_argument("--sizes", type=_ints_arg, help="construct2 fiber sizes, e.g. 2,2")
    p.add_argument("--stars", type=_ints_arg, help="construct2 starred local indices")
    p.add_argument("--l", type=int, help="construct3 left zero size")
    p.add_argument("--extra", type=int, help="construct3 number of extra elements")
    p.add_argument("--phi", type=_ints_arg, help="construct3 retraction, e.g. 0,1,0")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a theorem over exhaustive populations")
    p.add_argument("check", nargs="?", help=f"one of {', '.join(CHECKS)}")
    p.add_argument("--all", action="store_true", help="run every check at default bounds")
    p.add_argument("--max-order", type=int)
    p.add_argument("--max-size", type=int, help="largest set size for T1")
    p.add_argument("--m", type=int, help="largest m for T2/T3")
    p.add_argument("--k", type=int, help="largest k for T2/T3")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-order-5", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list or count all semigroup tables of order n")
    p.add_argument("n", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-order-5", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SemigroupError as exc:
        _emit({
            "command": args.command,
            "valid": False,
            "error": {"kind": exc.kind, "message": str(exc), "witness": exc.witness()},
        })
        print(f"semiprob: {exc.kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
