"""Command line front end.

Exit codes: 0 on success, 1 on a verification failure (or a failed pair
check / cancelled job), 2 on usage errors.  Output goes to stdout in the
chosen format; progress and diagnostics stay on stderr so stdout remains
machine-clean.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Optional

from . import engine, formulas, verify, words
from .engine import AvoidanceQuery, SearchCancelled
from .perms import format_perm, parse_pattern_set, parse_perm
from .polynomials import QPoly, QTPoly

_POLY_STATS = ("inv", "maj", "majdes")

_BIJECTIONS = ("231-321", "312-321", "231-312-321",
               "132-213-partition", "132-231-partition", "132-to-231")


def _poly_csv(p) -> str:
    rows = ["q,t,c"]
    if isinstance(p, QPoly):
        rows += [f"{i},0,{c}" for i, c in enumerate(p.coeffs) if c]
    else:
        rows += [f"{qe},{te},{c}" for qe, te, c in p.terms]
    return "\n".join(rows)


def _emit_poly(p, fmt: str, meta: dict) -> None:
    if fmt == "text":
        print(p)
    elif fmt == "json":
        print(json.dumps({**meta, "poly": p.to_json()}))
    else:
        print(_poly_csv(p))


def _deadline_checker(limit: Optional[float]) -> Optional[Callable[[], bool]]:
    if limit is None:
        return None
    deadline = time.monotonic() + limit
    return lambda: time.monotonic() > deadline


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub.add_argument("--progress", action="store_true",
                     help="report progress on stderr")
    sub.add_argument("--limit-seconds", type=float, default=None,
                     help="abort cleanly after this many seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patstat",
        description="Statistic generating polynomials over pattern-avoiding permutations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list an avoidance set in lexicographic order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", default="", help="comma-separated patterns, e.g. 132,213")
    _add_common(p)

    p = sub.add_parser("count", help="cardinality of an avoidance set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", default="")
    _add_common(p)

    p = sub.add_parser("poly", help="statistic generating polynomial")
    p.add_argument("--stat", choices=_POLY_STATS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", default="")
    _add_common(p)

    p = sub.add_parser("classify", help="partition pattern subsets by polynomial equality")
    p.add_argument("--k", type=int, required=True, help="pattern length (ground set S_k)")
    p.add_argument("--size", type=int, required=True, help="subset size")
    p.add_argument("--stat", choices=("inv", "maj", "maj-des"), required=True)
    p.add_argument("--nmax", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("series", help="truncated generating-function expansion")
    p.add_argument("--gf", choices=formulas.SERIES_IDS, required=True)
    p.add_argument("--order", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("formula", help="evaluate a closed-form catalog entry")
    p.add_argument("--id", dest="formula_id", required=True,
                   choices=sorted(formulas.CLOSED_FORMS))
    p.add_argument("--n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("foata", help="run rearrangement on a 0/1 word")
    p.add_argument("--word", required=True)
    p.add_argument("--inverse", action="store_true")
    _add_common(p)

    p = sub.add_parser("decompose", help="Ferrers/Durfee decomposition of a 0/1 word")
    p.add_argument("--word", required=True)
    _add_common(p)

    p = sub.add_parser("bijection", help="apply one of the explicit bijections")
    p.add_argument("--name", choices=_BIJECTIONS, required=True)
    p.add_argument("--input", required=True,
                   help="permutation (forward) or word/partition (with --inverse)")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--n", type=int, default=None,
                   help="target length for inverse partition maps")
    _add_common(p)

    p = sub.add_parser("mahonian", help="check a Mahonian pair of avoidance sets")
    p.add_argument("--left", required=True, help="patterns for the maj side")
    p.add_argument("--right", required=True, help="patterns for the inv side")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("paper", "conjectures"), required=True)
    p.add_argument("--nmax", type=int, default=8)
    _add_common(p)

    return parser


def _cmd_enumerate(args) -> int:
    patterns = parse_pattern_set(args.avoid)
    stop = _deadline_checker(args.limit_seconds)
    out = []
    emitted = 0
    start = time.monotonic()
    stream_text = args.format == "text"
    for p in engine.enumerate_avoiders(args.n, patterns, should_stop=stop):
        if stream_text:
            print(format_perm(p))
        else:
            out.append(format_perm(p))
        emitted += 1
        if args.progress and emitted % 100000 == 0:
            rate = emitted / (time.monotonic() - start + 1e-9)
            print(f"... {emitted} avoiders ({rate:.0f}/s)", file=sys.stderr)
    if args.format == "json":
        print(json.dumps({"n": args.n, "patterns": args.avoid and args.avoid.split(",") or [],
                          "avoiders": out}))
    elif args.format == "csv":
        print("\n".join(["perm"] + out))
    return 0


def _cmd_count(args) -> int:
    patterns = parse_pattern_set(args.avoid)
    count = engine.count_avoiders(args.n, patterns)
    if args.format == "json":
        print(json.dumps({"n": args.n, "patterns": list(map(format_perm, patterns)),
                          "count": count}))
    else:
        print(count)
    return 0


def _cmd_poly(args) -> int:
    patterns = parse_pattern_set(args.avoid)
    if args.stat == "majdes":
        poly = engine.maj_des_poly(args.n, patterns)
    else:
        poly = engine.stat_poly(args.n, patterns, args.stat)
    meta = {"n": args.n, "patterns": [format_perm(p) for p in patterns],
            "stat": args.stat}
    _emit_poly(poly, args.format, meta)
    return 0


def _cmd_classify(args) -> int:
    report = engine.classify(
        args.k, args.size, args.stat, args.nmax,
        should_stop=_deadline_checker(args.limit_seconds),
    )
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        for cls in report.classes:
            print(" | ".join(",".join(format_perm(p) for p in s) for s in cls))
    return 0


def _cmd_series(args) -> int:
    s = formulas.series_expand(args.gf, args.order)
    if args.format == "json":
        print(json.dumps({"id": args.gf, "order": args.order, "coeffs": s.to_json()}))
    elif args.format == "csv":
        rows = ["x,q,t,c"]
        for i, c in enumerate(s.coeffs):
            rows += [f"{i},{qe},{te},{v}" for qe, te, v in c.terms]
        print("\n".join(rows))
    else:
        for i, c in enumerate(s.coeffs):
            print(f"x^{i}: {c}")
    return 0


def _cmd_formula(args) -> int:
    poly = formulas.closed_form(args.formula_id, args.n)
    _emit_poly(poly, args.format, {"id": args.formula_id, "n": args.n})
    return 0


def _cmd_foata(args) -> int:
    w = words.parse_word(args.word)
    image = words.foata_inverse(w) if args.inverse else words.foata(w)
    if args.format == "json":
        print(json.dumps({"word": words.format_word(w) if w else "",
                          "image": words.format_word(image) if image else ""}))
    else:
        print(words.format_word(image))
    return 0


def _cmd_decompose(args) -> int:
    w = words.parse_word(args.word)
    lam, d = words.lambda_of(w), words.durfee(w)
    beta, rho = words.beta_of(w), words.rho_of(w)
    if args.format == "json":
        print(json.dumps({"lambda": list(lam), "d": d,
                          "beta": list(beta), "rho": list(rho)}))
    else:
        print(f"lambda={words.format_partition(lam)}")
        print(f"d={d}")
        print(f"beta={words.format_partition(beta)}")
        print(f"rho={words.format_partition(rho)}")
    return 0


def _cmd_bijection(args) -> int:
    name = args.name
    if name in ("231-321", "312-321", "231-312-321"):
        fwd = {"231-321": words.to_word_231_321,
               "312-321": words.to_word_312_321,
               "231-312-321": words.to_word_231_312_321}[name]
        back = {"231-321": words.from_word_231_321,
                "312-321": words.from_word_312_321,
                "231-312-321": words.from_word_231_312_321}[name]
        if args.inverse:
            print(format_perm(back(words.parse_word(args.input))))
        else:
            print(words.format_word(fwd(parse_perm(args.input))))
    elif name in ("132-213-partition", "132-231-partition"):
        fwd = (words.descent_partition_132_213 if name == "132-213-partition"
               else words.prefix_partition_132_231)
        back = (words.from_descent_partition_132_213 if name == "132-213-partition"
                else words.from_prefix_partition_132_231)
        if args.inverse:
            if args.n is None:
                raise ValueError("inverse partition maps need --n")
            print(format_perm(back(words.parse_partition(args.input), args.n)))
        else:
            print(words.format_partition(fwd(parse_perm(args.input))))
    else:  # 132-to-231
        if args.inverse:
            print(format_perm(words.map_231_to_132(parse_perm(args.input))))
        else:
            print(format_perm(words.map_132_to_231(parse_perm(args.input))))
    return 0


def _cmd_mahonian(args) -> int:
    left = AvoidanceQuery(args.n, parse_pattern_set(args.left))
    right = AvoidanceQuery(args.n, parse_pattern_set(args.right))
    ok = engine.mahonian_pair_check(left, right)
    if args.format == "json":
        print(json.dumps({"n": args.n, "left": args.left, "right": args.right,
                          "mahonian": ok}))
    else:
        print("true" if ok else "false")
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    if args.suite == "paper":
        results = verify.run_paper_suite(args.nmax)
    else:
        results = verify.run_conjecture_suite(args.nmax)
    if args.format == "json":
        print(json.dumps([{"name": r.name, "passed": r.passed, "cases": r.cases,
                           "failures": list(r.failures)} for r in results]))
    else:
        for r in results:
            print(r.line())
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} checks passed")
    return 0 if all(r.passed for r in results) else 1


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "poly": _cmd_poly,
    "classify": _cmd_classify,
    "series": _cmd_series,
    "formula": _cmd_formula,
    "foata": _cmd_foata,
    "decompose": _cmd_decompose,
    "bijection": _cmd_bijection,
    "mahonian": _cmd_mahonian,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SearchCancelled:
        print("patstat: time limit exceeded, partial results suppressed", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        print("patstat: interrupted", file=sys.stderr)
        return 1
    except OverflowError as exc:
        print(f"patstat: integer overflow: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.exit(2, f"patstat: {exc}\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
