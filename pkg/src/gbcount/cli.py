"""Command-line interface: ``gbcount <verb> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 enumeration budget exceeded,
3 invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .enumeration import count_gbs, enumerate_reduced_gbs
from .formulas import FormulaError, formula_count, modified_bound, onn_bound
from .geometry import GeometryError, check_conjecture, find_unique_augmentation
from .ideal import DataError, DataSet
from .models import InputOutputData, enumerate_minimal_models
from .survey import (DEFAULT_BUDGET, BudgetExceeded, InvariantViolation, check_invariants,
                     run_survey)

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_count(args) -> int:
    S = DataSet.parse(_read(args.input))
    coll = enumerate_reduced_gbs(S)
    if args.format == "json":
        doc = {"p": S.p, "n": S.n, "m": S.m, "count": len(coll),
               "bases": [{"generators": e.basis.render(), "staircase": [list(c) for c in e.staircase],
                          "weights": list(e.basis.order_witness.weights)} for e in coll],
               "admissible": coll.admissible, "rejected": coll.rejected}
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [str(len(coll))] + ["{" + ", ".join(e.basis.render()) + "}" for e in coll]
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_formula(args) -> int:
    S = DataSet.parse(_read(args.input))
    value = formula_count(S.points, S.n, S.p)
    lines = [f"formula: {value}"]
    status = EXIT_OK
    if args.verify:
        actual = count_gbs(S)
        verdict = "MATCH" if actual == value else "MISMATCH"
        lines.append(f"enumeration: {actual}")
        lines.append(verdict)
        if actual != value:
            status = EXIT_INVARIANT
    _emit("\n".join(lines) + "\n", args.output)
    return status


def cmd_bound(args) -> int:
    if not 0 <= args.m <= args.p ** args.n:
        raise UsageError(f"m={args.m} outside 0..{args.p ** args.n}")
    orig, mod = onn_bound(args.n, args.m), modified_bound(args.n, args.m, args.p)
    if args.format == "json":
        _emit(json.dumps({"n": args.n, "m": args.m, "p": args.p,
                          "original_bound": orig, "modified_bound": mod}) + "\n", args.output)
    else:
        _emit(f"original bound: {orig}\nmodified bound: {mod}\n", args.output)
    return EXIT_OK


def _m_range(text: str | None, total: int) -> list:
    if text is None:
        return list(range(total + 1))
    try:
        if ":" in text:
            lo, hi = text.split(":")
            ms = list(range(int(lo or 0), int(hi or total) + 1))
        else:
            ms = [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"bad --m-range {text!r}; use LO:HI or a comma list") from None
    if any(not 0 <= m <= total for m in ms):
        raise UsageError(f"--m-range must stay within 0..{total}")
    return ms


def cmd_survey(args) -> int:
    ms = _m_range(args.m_range, args.p ** args.n)
    s = run_survey(args.n, args.p, ms, jobs=args.jobs, sample=args.sample, seed=args.seed,
                   budget=args.budget, compare=args.compare_paper, check=False)
    text = s.to_json() if args.format == "json" else s.to_csv()
    _emit(text, args.output)
    if args.sample is not None:
        print("note: sampled rows; actual_max is a lower bound", file=sys.stderr)
    for d in s.discrepancies:
        print(f"discrepancy [{d['source']}] m={d['m']} {d['column']}: "
              f"published {d['published']}, computed {d['computed']}", file=sys.stderr)
    check_invariants(s)
    return EXIT_OK


def cmd_conjecture(args) -> int:
    rep = check_conjecture(args.p, args.n, args.max_m, mode=args.mode)
    doc = rep.as_dict()
    if args.format == "json":
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [f"sets examined: {rep.sets_examined}",
                 f"candidates tested: {rep.candidates_tested}",
                 f"skipped (not linked): {rep.skipped_unlinked}",
                 f"skipped (hull holes): {rep.skipped_holes}",
                 f"violations: {len(rep.violations)}"]
        for v in rep.violations:
            lines.append(f"  {v.base} + {v.added}: {v.base_count} -> {v.new_count}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_augment(args) -> int:
    S = DataSet.parse(_read(args.input))
    before = count_gbs(S)
    res = find_unique_augmentation(S, args.budget)
    if args.format == "json":
        doc = {"base_count": before, "found": res is not None}
        if res is not None:
            doc.update({"added": [list(q) for q in res.added_points],
                        "added_count": len(res.added_points), "unique_size": res.unique_size})
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [f"base count: {before}"]
        if res is None:
            lines.append(f"not found within {args.budget} added points")
        else:
            lines.append(f"added {len(res.added_points)}: " + "; ".join(" ".join(map(str, q)) for q in res.added_points))
            lines.append(f"unique size: {res.unique_size}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_models(args) -> int:
    data = InputOutputData.parse(_read(args.input))
    models = enumerate_minimal_models(data)
    if args.format == "json":
        doc = {"count": len(models), "models": [m.render() for m in models]}
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [str(len(models))]
        for i, model in enumerate(models, 1):
            lines.append(f"model {i}:")
            lines.extend("  " + line for line in model.render())
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gbcount", description="Count reduced Groebner bases of ideals of points over Z_p.")
    parser.add_argument("--backend", action="store_true", help="print the kernel backend and exit")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)

    def common(p, fmt=("text", "json")):
        p.add_argument("--output", "-o", help="write to this file instead of stdout")
        p.add_argument("--format", choices=fmt, default=fmt[0])

    p = sub.add_parser("count", help="list every reduced GB of a point set")
    p.add_argument("--input", "-i", required=True, help="data set file ('p n' then one point per line)")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("formula", help="closed-form count for 2 or 3 points")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--verify", action="store_true", help="also enumerate and compare")
    common(p, ("text",))
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("bound", help="original and modified upper bounds")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("survey", help="maximum GB count for every set size")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--m-range", help="LO:HI (inclusive) or comma list; default 0:p^n")
    p.add_argument("--jobs", "-j", type=int, default=1)
    p.add_argument("--sample", type=int, help="draw K random subsets per size instead of all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max subsets per size in exact mode")
    p.add_argument("--compare-paper", action="store_true", help="report cells differing from published tables")
    common(p, ("csv", "json"))
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("conjecture", help="test linked-point additions exhaustively")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--mode", choices=("exists", "forall"), default="exists")
    common(p, ("json", "text"))
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("augment", help="fewest points to add for a unique GB")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--budget", type=int, default=6, help="largest number of points to try adding")
    common(p)
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("models", help="distinct minimal PDSs for input-output data")
    p.add_argument("--input", "-i", required=True, help="'p n' then 2n integers per line")
    common(p)
    p.set_defaults(func=cmd_models)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend:
        print(kernels.BACKEND)
        return EXIT_OK
    if not args.verb:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, DataError, FormulaError, GeometryError, ValueError) as e:
        print(f"gbcount {args.verb}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"gbcount {args.verb}: error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as e:
        print(f"gbcount {args.verb}: INVARIANT VIOLATION: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
