"""Command-line frontend.

Every subcommand prints one JSON document on stdout.  Exit codes: 0 success,
1 verification failure, 2 malformed input, 3 budget or cap exceeded.
``--pretty`` indents the JSON and adds a human table on stderr for tables.
The environment variable HYPEROCTA_CAP overrides the default edge cap of the
ordering searches.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import census
from .decide import DEFAULT_EDGE_CAP, has_signed_fcpo
from .errors import BudgetExceededError
from .graphs import SignedGraph
from .orderings import EdgeOrdering, decompose, phi, rewrite_steps
from .permutations import SignedPermutation
from .verification import SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3


def _default_cap() -> int:
    raw = os.environ.get("HYPEROCTA_CAP")
    if raw is None:
        return DEFAULT_EDGE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"HYPEROCTA_CAP: expected an integer, got {raw!r}") from None


def _load_graph(spec: str) -> SignedGraph:
    text = spec
    if not spec.lstrip().startswith("{"):
        path = Path(spec)
        if not path.exists():
            raise ValueError(f"graph: file {spec!r} does not exist")
        text = path.read_text()
    return SignedGraph.from_json(text)


def _load_ordering(graph: SignedGraph, spec: str) -> EdgeOrdering:
    literals = [tok.strip() for tok in spec.split(",") if tok.strip()]
    return EdgeOrdering.from_literals(graph, literals)


def _element_report(p: SignedPermutation) -> dict:
    ct = p.cycle_type()
    return {
        "degree": p.degree,
        "images": list(p.images),
        "cycle_notation": p.cycle_str(),
        "classification": p.classify_full_cycle().value,
        "cycle_type": {"even": list(ct.even_parts), "odd": list(ct.odd_parts)},
        "psi": p.psi_sign(),
        "flip_set": sorted(p.flip_set()),
    }


def _emit(doc: dict, pretty: bool) -> None:
    print(json.dumps(doc, indent=2 if pretty else None))


def _cmd_classify(args) -> int:
    if (args.images is None) == (args.cycles is None):
        raise ValueError("classify: provide exactly one of --images or --cycles")
    if args.images is not None:
        try:
            images = [int(tok) for tok in args.images.split(",")]
        except ValueError:
            raise ValueError(f"images: expected comma-separated integers, got {args.images!r}") from None
        p = SignedPermutation(images)
    else:
        p = SignedPermutation.from_cycle_str(args.cycles, n=args.degree)
    _emit(_element_report(p), args.pretty)
    return EXIT_OK


def _cmd_product(args) -> int:
    graph = _load_graph(args.graph)
    ordering = _load_ordering(graph, args.ordering)
    doc = _element_report(ordering.pi())
    doc["ordering"] = ordering.to_literals()
    doc["stripped_product"] = list(phi(ordering).pi().images)
    _emit(doc, args.pretty)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    graph = _load_graph(args.graph)
    ordering = _load_ordering(graph, args.ordering)
    dec = decompose(ordering)
    product = ordering.pi()
    doc = {
        "inversions": [str(t) for t in dec.inversions],
        "base_word": [str(t) for t in dec.base_word],
        "base_images": list(dec.base_product.images),
        "flip_count": len(dec.inversions),
        "loop_count": graph.loop_count,
        "parity_match": len(dec.inversions) % 2 == graph.loop_count % 2,
        "recomposes": dec.recompose() == product,
        "product_images": list(product.images),
    }
    if args.steps:
        step1, step2, step3 = rewrite_steps(ordering.word())
        doc["steps"] = {
            "word": [str(t) for t in ordering.word()],
            "after_flip_pass": [str(t) for t in step1],
            "after_expansion": [str(t) for t in step2],
            "after_final_pass": [str(t) for t in step3],
        }
    _emit(doc, args.pretty)
    return EXIT_OK


def _cmd_decide(args) -> int:
    graph = _load_graph(args.graph)
    report = has_signed_fcpo(graph, cap=args.cap)
    _emit(report.to_json_dict(), args.pretty)
    return EXIT_OK


def _cmd_count(args) -> int:
    target = SignedPermutation.from_cycle_str(args.target, n=args.degree)
    query = census.FactorizationQuery(target, args.k, args.generators)
    result = census.count_factorizations(query, prune=not args.no_prune, jobs=args.jobs)
    n = target.degree
    formula = None
    if target == census.even_full_cycle(n) and args.k == n - 1:
        formula = n ** (n - 2)
    elif target == census.odd_full_cycle(n) and args.k == n:
        formula = n**n
    doc = {
        "query": {
            "target": target.cycle_str(),
            "degree": n,
            "k": args.k,
            "generators": args.generators,
        },
        "count": result.count,
        "formula": formula,
        "match": None if formula is None else result.count == formula,
        "nodes": result.nodes_explored,
        "ms": round(result.elapsed * 1000, 3),
    }
    _emit(doc, args.pretty)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    n = args.n
    if args.what == "odd-cycles":
        enumerated = census.count_odd_full_cycles(n, mode="enumerate")
        formula = census.count_odd_full_cycles(n, mode="formula")
    elif args.what == "trees-one-loop":
        enumerated = census.enumerate_signed_trees_one_loop(n)
        formula = n ** (n - 2) * n * 2 ** (n - 1)
    elif args.what == "odd-tree-orderings":
        enumerated = census.z_count(n)
        formula = enumerated
    else:
        enumerated = formula = census.chapuy_stump_count(n)
    doc = {
        "what": args.what,
        "n": n,
        "count": enumerated,
        "formula": formula,
        "match": enumerated == formula,
    }
    _emit(doc, args.pretty)
    return EXIT_OK


def _cmd_verify(args) -> int:
    checks = run_suite(args.suite, max_n=args.max_n, jobs=args.jobs)
    failed = sum(1 for c in checks if not c.ok)
    doc = {
        "suite": args.suite,
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
        "passed": len(checks) - failed,
        "failed": failed,
    }
    _emit(doc, args.pretty)
    if args.pretty:
        width = max(len(c.name) for c in checks)
        for c in checks:
            mark = "pass" if c.ok else "FAIL"
            print(f"{c.name:<{width}}  {mark}  {c.detail}", file=sys.stderr)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperocta",
        description="Signed permutations, signed graphs, and edge-ordering products.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent JSON; add tables on stderr")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for counting searches")
    common.add_argument(
        "--deterministic",
        action="store_true",
        help="canonical witness selection (searches are deterministic already; kept for scripts)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a signed permutation", parents=[common])
    p.add_argument("--images", help="comma-separated images of 1..n, e.g. '2,-3,-5,-1,-4'")
    p.add_argument("--cycles", help="cycle notation, e.g. '(1 2 -3 5 -4)+'")
    p.add_argument("--degree", type=int, help="degree when points are omitted from --cycles")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("product", parents=[common], help="product of an edge ordering")
    p.add_argument("--graph", required=True, help="graph JSON file or inline JSON")
    p.add_argument("--ordering", required=True, help="comma-separated edge literals, first applied first")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("decompose", parents=[common], help="factor an ordering product into flips times base")
    p.add_argument("--graph", required=True)
    p.add_argument("--ordering", required=True)
    p.add_argument("--steps", action="store_true", help="include the intermediate rewrite words")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("decide", parents=[common], help="existence of even/odd full-cyclic orderings")
    p.add_argument("--graph", required=True)
    p.add_argument("--cap", type=int, default=None, help="edge cap for the ordering search")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("count", parents=[common], help="count reflection words with a given product")
    p.add_argument("--target", required=True, help="target in cycle notation, e.g. '(1 2 3)-'")
    p.add_argument("--k", type=int, required=True, help="word length")
    p.add_argument("--generators", choices=("all", "positive"), default="all")
    p.add_argument("--degree", type=int, help="ambient degree when fixed points are omitted")
    p.add_argument("--no-prune", action="store_true", help="disable search pruning")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", parents=[common], help="census counts with their closed forms")
    p.add_argument(
        "--what",
        choices=("odd-cycles", "trees-one-loop", "odd-tree-orderings", "coxeter-count"),
        required=True,
    )
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "cap", None) is None and args.command == "decide":
            args.cap = _default_cap()
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
