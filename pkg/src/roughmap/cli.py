"""Command-line front end: ``roughmap {check,induce,approx,verify,falsify,info}``.

Exit codes: 0 success or expectation met, 1 expectation not met, 2 input
error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import document
from .approx import lower_approx, lower_approx_pred, upper_approx, upper_approx_pred
from .mapping import predecessor_witness, successor_witness, type1_witness, type2_witness
from .propcheck import REGISTRY, BudgetExceeded, EnumerationBudget, check_law, get_law
from .relation import BinaryRelation, Subset, UniverseError
from .relmap import induce, inverse_induce

EXIT_OK = 0
EXIT_EXPECTATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

APPROXIMATIONS = {
    "lower": lower_approx,
    "upper": upper_approx,
    "lower-pred": lower_approx_pred,
    "upper-pred": upper_approx_pred,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def format_relation(R: BinaryRelation) -> str:
    return "{" + ", ".join(f"({a}, {b})" for a, b in R.labeled_pairs()) + "}"


def format_subset(S: Subset) -> str:
    return "{" + ", ".join(S.labels) + "}"


def _emit(args, plain: str, structured: dict) -> None:
    if args.format == "json":
        print(json.dumps(structured, indent=2, ensure_ascii=False))
    else:
        print(plain)


def cmd_check(args) -> int:
    doc = document.load(args.file)
    f = doc.get("mappings", args.mapping)
    R = doc.get("relations", args.relation)
    if f.domain is not R.universe:
        raise UniverseError(
            f"relation {args.relation!r} is not on the domain of mapping {args.mapping!r}"
        )
    U = f.domain
    checks = [
        ("predecessor-consistent", "predecessor_consistent", predecessor_witness(f, R)),
        ("successor-consistent", "successor_consistent", successor_witness(f, R)),
        ("type-1 consistent", "type1_consistent", type1_witness(f, R)),
        ("type-2 consistent", "type2_consistent", type2_witness(f, R)),
    ]
    lines = [f"mapping {args.mapping}, relation {args.relation}"]
    structured = {"mapping": args.mapping, "relation": args.relation}
    for title, key, witness in checks:
        if witness is None:
            lines.append(f"{title}: yes")
            structured[key] = {"holds": True}
        else:
            lines.append(f"{title}: no ({witness.describe(U)})")
            structured[key] = {
                "holds": False,
                "witness": {
                    "x": U.labels[witness.x],
                    "y": U.labels[witness.y],
                    "element": U.labels[witness.element],
                },
            }
    _emit(args, "\n".join(lines), structured)
    return EXIT_OK


def cmd_induce(args) -> int:
    doc = document.load(args.file)
    f = doc.get("mappings", args.mapping)
    R = doc.get("relations", args.relation)
    if args.direction == "forward":
        if R.universe is not f.domain:
            raise UniverseError(f"relation {args.relation!r} is not on the domain of {args.mapping!r}")
        result = induce(f, R)
    else:
        if R.universe is not f.codomain:
            raise UniverseError(
                f"relation {args.relation!r} is not on the codomain of {args.mapping!r}"
            )
        result = inverse_induce(f, R)
    uname = doc.universe_name(result.universe)
    plain = f"{args.direction} {args.mapping} {args.relation}: {len(result)} pairs on {uname}\n"
    plain += format_relation(result)
    structured = {
        "direction": args.direction,
        "mapping": args.mapping,
        "relation": args.relation,
        "universe": uname,
        "pairs": [list(p) for p in result.labeled_pairs()],
    }
    _emit(args, plain, structured)
    return EXIT_OK


def cmd_approx(args) -> int:
    doc = document.load(args.file)
    R = doc.get("relations", args.relation)
    X = doc.get("sets", args.set)
    if R.universe is not X.universe:
        raise UniverseError(f"set {args.set!r} and relation {args.relation!r} differ in universe")
    result = APPROXIMATIONS[args.operator](R, X)
    plain = f"{args.operator} approximation of {args.set} under {args.relation}\n"
    plain += format_subset(result)
    structured = {
        "operator": args.operator,
        "relation": args.relation,
        "set": args.set,
        "universe": doc.universe_name(R.universe),
        "members": result.labels,
    }
    _emit(args, plain, structured)
    return EXIT_OK


def _budget(args) -> EnumerationBudget:
    if (args.sample is None) != (args.seed is None):
        raise UniverseError("--sample and --seed must be given together")
    return EnumerationBudget(
        n=args.n, m=args.m, sample=args.sample, seed=args.seed, cap=args.cap, workers=args.workers
    )


def cmd_verify(args) -> int:
    law = get_law(args.law)
    if args.command == "falsify" and law.expected_valid:
        raise UniverseError(f"{law.id} is not a falsifiable claim; use verify")
    report = check_law(law, _budget(args))
    witness = report.first_witness
    lines = [
        f"law: {law.id}",
        f"statement: {law.summary}",
        f"expectation: {law.expectation}",
        f"budget: {report.budget.describe()}",
        f"cases checked: {report.cases_checked}",
        f"hypothesis hits: {report.hypothesis_hits}",
        f"violations: {report.violations}",
        f"status: {report.status}",
    ]
    if witness is not None:
        lines.append("first witness:")
        lines.append(report.witness_json())
    structured = {
        "law": law.id,
        "expectation": law.expectation,
        "budget": {
            "n": report.budget.n,
            "m": report.budget.m,
            "sample": report.budget.sample,
            "seed": report.budget.seed,
        },
        "cases_checked": report.cases_checked,
        "hypothesis_hits": report.hypothesis_hits,
        "violations": report.violations,
        "status": report.status,
        "first_witness": None if witness is None else witness.to_document().to_json(),
    }
    _emit(args, "\n".join(lines), structured)
    if args.timing:
        print(f"elapsed: {report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK if report.expectation_met else EXIT_EXPECTATION


def cmd_info(args) -> int:
    rows = []
    for law in REGISTRY.values():
        axes = "[" + ", ".join(("f", "R") + law.axes) + "]"
        rows.append((law.id, law.expectation, axes, law.summary))
    if args.format == "json":
        print(
            json.dumps(
                [
                    {"id": i, "expectation": e, "quantifies": a, "statement": s}
                    for i, e, a, s in rows
                ],
                indent=2,
                ensure_ascii=False,
            )
        )
    else:
        width = max(len(r[0]) for r in rows)
        axes_width = max(len(r[2]) for r in rows)
        for law_id, expectation, axes, summary in rows:
            print(f"{law_id:<{width}}  {expectation:<11}  {axes:<{axes_width}}  {summary}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="roughmap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_format(p):
        p.add_argument("--format", choices=("plain", "json"), default="plain")
        return p

    p = with_format(sub.add_parser("check", help="consistency verdicts of a mapping"))
    p.add_argument("file")
    p.add_argument("mapping")
    p.add_argument("relation")
    p.set_defaults(run=cmd_check)

    p = with_format(sub.add_parser("induce", help="push a relation forward or pull it back"))
    p.add_argument("file")
    p.add_argument("mapping")
    p.add_argument("relation")
    p.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    p.set_defaults(run=cmd_induce)

    p = with_format(sub.add_parser("approx", help="lower/upper approximation of a set"))
    p.add_argument("file")
    p.add_argument("relation")
    p.add_argument("set")
    p.add_argument("--operator", choices=tuple(APPROXIMATIONS), default="lower")
    p.set_defaults(run=cmd_approx)

    for name, help_text in (
        ("verify", "sweep a registered law"),
        ("falsify", "sweep a falsifiable claim for counterexamples"),
    ):
        p = with_format(sub.add_parser(name, help=help_text))
        p.add_argument("law")
        p.add_argument("--n", type=int, default=3)
        p.add_argument("--m", type=int, default=2)
        p.add_argument("--sample", type=int, metavar="COUNT")
        p.add_argument("--seed", type=int)
        p.add_argument("--cap", type=int, default=10**8)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
        p.set_defaults(run=cmd_verify)

    p = with_format(sub.add_parser("info", help="list the law registry"))
    p.set_defaults(run=cmd_info)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except BudgetExceeded as exc:
        print(f"roughmap: budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except UniverseError as exc:
        print(f"roughmap: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
