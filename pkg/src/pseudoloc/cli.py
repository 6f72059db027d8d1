"""Command-line interface: compute/profile/verify/gen for scripts and CI.

Exit codes are part of the contract:
  0 success, 1 verification violations, 2 parse/usage error,
  3 not a pseudotree, 4 size cap exceeded, 5 k out of range.
"""

from __future__ import annotations

import argparse
import json
import sys

from .closed_form import PARAMETER_NAMES, compute_parameter
from .corpus import CORE_PARAMETERS, CorpusSpec, random_pseudotree, verify_corpus
from .errors import (
    GraphConstructionError,
    KOutOfRange,
    NotPseudotree,
    NotUnicyclic,
    SizeCapExceeded,
)
from .graph import Graph, encode_graph6, parse_edgelist, parse_graph6
from .structure import profile

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_PARSE = 2
EXIT_NOT_PSEUDOTREE = 3
EXIT_SIZE_CAP = 4
EXIT_K_RANGE = 5


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudoloc",
        description="Metric-location parameters of pseudotrees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute one parameter for input graphs")
    p_compute.add_argument("--param", required=True, choices=PARAMETER_NAMES)
    p_compute.add_argument("--k", type=int, default=None, help="k for --param dimk")
    p_compute.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p_compute.add_argument("--method", choices=("auto", "closed", "brute"), default="auto")
    p_compute.add_argument("--input", default="-", help="input file, '-' for stdin")
    p_compute.add_argument("--json", action="store_true", help="machine-readable output")

    p_profile = sub.add_parser("profile", help="print the structural profile")
    p_profile.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p_profile.add_argument("--input", default="-")
    p_profile.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="closed forms versus oracles over a corpus")
    p_verify.add_argument("--family", required=True, choices=("tree", "unicyclic", "cycle", "path"))
    p_verify.add_argument("--max-n", type=int, required=True)
    p_verify.add_argument("--params", default="all", help="comma list or 'all'")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--report", default=None, help="JSONL report path")
    p_verify.add_argument("--no-dedup", action="store_true", help="verify the labeled corpus")
    p_verify.add_argument("--json", action="store_true")

    p_gen = sub.add_parser("gen", help="emit seed-deterministic graph6 samples")
    p_gen.add_argument("--kind", required=True, choices=("tree", "unicyclic", "cycle", "path"))
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--count", type=int, default=1)
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _input_graphs(args) -> list[Graph]:
    text = _read_input(args.input)
    if args.format == "edgelist":
        return [parse_edgelist(text)]
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphConstructionError("no graph6 input lines")
    return [parse_graph6(ln) for ln in lines]


def _result_json(param: str, result) -> dict:
    out = {"param": param}
    out.update(result.to_json())
    return out


def _result_human(param: str, result) -> str:
    if result.is_exact:
        head = f"{param} = {result.value}"
    else:
        head = f"{param} in [{result.lo}, {result.hi}]"
    parts = [head, f"method={result.method}", f"tag={result.theorem_tag}"]
    if result.witness is not None:
        parts.append("witness={" + ",".join(map(str, result.witness)) + "}")
    return "  ".join(parts)


def _cmd_compute(args) -> int:
    if (args.param == "dimk") != (args.k is not None):
        print("--k must be supplied exactly when --param dimk", file=sys.stderr)
        return EXIT_PARSE
    graphs = _input_graphs(args)
    for g in graphs:
        result = compute_parameter(g, args.param, k=args.k, method=args.method)
        if args.json:
            print(json.dumps(_result_json(args.param, result), sort_keys=True))
        else:
            print(_result_human(args.param, result))
    return EXIT_OK


def _cmd_profile(args) -> int:
    graphs = _input_graphs(args)
    for g in graphs:
        payload = profile(g).to_json()
        if args.json:
            print(json.dumps(payload, sort_keys=True))
        else:
            print(json.dumps(payload, indent=2))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.params == "all":
        params = list(CORE_PARAMETERS)
    else:
        params = [p.strip() for p in args.params.split(",") if p.strip()]
        unknown = [p for p in params if p not in PARAMETER_NAMES]
        if unknown:
            print(f"unknown parameters: {unknown}", file=sys.stderr)
            return EXIT_PARSE
    spec = CorpusSpec(family=args.family, max_n=args.max_n, dedup=not args.no_dedup)
    records, violations = verify_corpus(
        spec, parameters=params, jobs=args.jobs, report_path=args.report
    )
    summary = {
        "family": args.family,
        "max_n": args.max_n,
        "params": params,
        "records": len(records),
        "violations": violations,
    }
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        print(
            f"verified {summary['records']} records over {args.family} corpus"
            f" (max_n={args.max_n}): {violations} violations"
        )
    return EXIT_OK if violations == 0 else EXIT_VIOLATIONS


def _cmd_gen(args) -> int:
    import random

    rng = random.Random(args.seed)
    spec = CorpusSpec(family=args.kind, max_n=args.n, seed=args.seed, count=args.count)
    for _ in range(args.count):
        print(encode_graph6(random_pseudotree(spec, rng=rng)))
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "profile": _cmd_profile,
        "verify": _cmd_verify,
        "gen": _cmd_gen,
    }
    try:
        return handlers[args.command](args)
    except KOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_K_RANGE
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except (NotPseudotree, NotUnicyclic) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_PSEUDOTREE
    except (GraphConstructionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
