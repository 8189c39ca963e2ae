"""Command-line entry point: ``cliquecover <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from contextlib import nullcontext
from pathlib import Path
from typing import Iterator

from . import constructions
from .cover import EXACT_PARTITION_MAX_N, CliqueCover, cp_exact, lcc_exact, scp_exact, validate_cover
from .graph import Graph, GraphError, complement, mask_of, parse_edge_list, parse_graph6
from .harness.cache import BundleCache
from .harness.conjectures import Summary, Sweeper
from .harness.enumerate import (
    EXHAUSTIVE_MAX_N,
    count_labeled_graphs,
    enumerate_labeled_graphs,
    random_graphs,
)
from .harness.report import FORMATS, emit_report
from .harness.suite import run_construction_suite
from .ng_bounds import (
    check_alpha_chi_bound,
    check_corollary_alpha,
    check_near_regular,
    check_ratio_bound,
    cp_ng_bound,
    scp_ng_bound,
)

GATED_N = 7


def _dump(obj: object) -> None:
    print(json.dumps(obj, indent=2))


def _read_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "edges", None):
        return parse_edge_list(Path(args.edges).read_text())
    if not args.graph:
        raise GraphError("give a graph6 string or --edges FILE")
    return parse_graph6(args.graph)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="graph6 string")
    p.add_argument("--edges", metavar="FILE", help="edge-list file ('n m' then 'u v' lines)")


def _add_source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="vertex count")
    p.add_argument("--exhaustive", action="store_true", help="every labelled graph on n vertices")
    p.add_argument("--samples", type=int, default=200, help="random graphs when not exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", metavar="FILE", help="graph6 file, one graph per line")
    p.add_argument("--threads", type=int, default=1, help="worker processes")


def _graph6_lines(path: str) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            if line.strip():
                yield parse_graph6(line)


def _source(args: argparse.Namespace) -> Iterator[Graph]:
    if args.input:
        return _graph6_lines(args.input)
    if args.n is None:
        raise SystemExit("error: give --n N or --input FILE")
    if not args.exhaustive:
        return random_graphs(args.n, args.samples, args.seed)
    if args.n > EXHAUSTIVE_MAX_N:
        raise SystemExit(f"error: exhaustive mode supports n <= {EXHAUSTIVE_MAX_N}")
    return enumerate_labeled_graphs(args.n)


def _estimate(args: argparse.Namespace) -> None:
    if not (args.exhaustive and args.n is not None and args.n >= GATED_N and not args.input):
        return
    sample = 200
    t0 = time.perf_counter()
    with Sweeper(1) as sw:
        for _ in sw.reports(random_graphs(args.n, sample, args.seed)):
            pass
    per = (time.perf_counter() - t0) / sample / max(1, args.threads)
    total = count_labeled_graphs(args.n)
    print(f"exhaustive n={args.n}: {total} graphs, estimated {per * total / 60:.0f} min", file=sys.stderr)


def _conjectures(flag: str) -> tuple[int, ...]:
    return {"1": (1,), "2": (2,), "both": (1, 2)}[flag]


def cmd_lcc(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    k, cover = lcc_exact(g)
    if args.json:
        _dump({"lcc": k, "cliques": cover.vertex_lists(), "valency": list(cover.valency)})
    else:
        print(k)
        for c in cover.vertex_lists():
            print(" ".join(map(str, c)))
    return 0


def cmd_cover(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    try:
        cert = constructions.build(args.method, g)
    except constructions.PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2
    _dump(cert.to_json())
    return 0 if cert.verdict else 1


def _sweep(args: argparse.Namespace, out) -> Summary:
    summary = Summary(_conjectures(args.conjecture))
    cache = None if args.no_cache else BundleCache.from_env()
    with Sweeper(args.threads, cache, args.lemma) as sw:
        emit_report(sw.reports(_source(args), summary.errors), args.format, out, summary)
        stats = sw.stats
    print(
        f"graphs={summary.total} conj1_violations={summary.conj1_violations} "
        f"conj2_violations={summary.conj2_violations} equality1={summary.equality1} "
        f"equality2={summary.equality2} lemma_failures={summary.lemma_failures} "
        f"errors={len(summary.errors)} solver_calls={stats.solver_calls} cache_hits={stats.cache_hits}",
        file=sys.stderr,
    )
    return summary


def _finish(summary: Summary) -> int:
    if summary.violations:
        for g6 in summary.violators:
            print(f"!!! COUNTEREXAMPLE: {g6}", file=sys.stderr)
        return 1
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    _estimate(args)
    target = args.out or (os.devnull if args.quiet else None)
    with (open(target, "w") if target else nullcontext(sys.stdout)) as fh:
        summary = _sweep(args, fh)
    print(json.dumps(summary.as_dict()))
    return _finish(summary)


def cmd_report(args: argparse.Namespace) -> int:
    _estimate(args)
    with open(args.out, "w") as fh:
        summary = _sweep(args, fh)
    return _finish(summary)


def cmd_suite(args: argparse.Namespace) -> int:
    summary = run_construction_suite(_source(args), args.method, args.threads)
    _dump(summary.as_dict())
    return 0 if summary.ok else 1


def _packing_cmd(args: argparse.Namespace, builder, exact) -> int:
    g = _read_graph(args)
    res = builder(g)
    out = res.to_json()
    if g.n <= EXACT_PARTITION_MAX_N:
        a, b = exact(g)[0], exact(complement(g))[0]
        out["exact"] = {"graph": a, "complement": b, "sum": a + b}
    _dump(out)
    return 0


def cmd_scp(args: argparse.Namespace) -> int:
    return _packing_cmd(args, scp_ng_bound, scp_exact)


def cmd_cp(args: argparse.Namespace) -> int:
    return _packing_cmd(args, cp_ng_bound, cp_exact)


def cmd_bounds(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    verdicts = [check_alpha_chi_bound(g)]
    if g.edge_count():
        verdicts += [check_ratio_bound(g), check_corollary_alpha(g)]
    if g.n and g.max_degree() <= g.min_degree() + 1:
        verdicts.append(check_near_regular(g))
    _dump([v.to_json() for v in verdicts])
    return 0 if all(v.holds for v in verdicts) else 1


def cmd_validate(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    cliques = json.loads(Path(args.cover).read_text())
    check = validate_cover(g, CliqueCover(g.n, tuple(mask_of(c) for c in cliques)))
    _dump({"valid": check.valid, "max_valency": check.max_valency, "valency": list(check.per_vertex),
           "problem": check.problem, "witness": check.witness})
    return 0 if check.valid else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquecover", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lcc", help="exact local clique cover number with a witness cover")
    _add_graph_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lcc)

    p = sub.add_parser("cover", help="constructive cover certificate")
    _add_graph_args(p)
    p.add_argument("--method", required=True, choices=["alpha2", "max-clique", "local-alpha", "claw-free", "exact"])
    p.set_defaults(func=cmd_cover)

    for name, func, help_ in (
        ("check", cmd_check, "conjecture sweep; exit 0 iff no violations"),
        ("report", cmd_report, "conjecture sweep written to a report file"),
    ):
        p = sub.add_parser(name, help=help_)
        _add_source_args(p)
        p.add_argument("--conjecture", choices=["1", "2", "both"], default="both")
        p.add_argument("--format", choices=FORMATS, default="json-lines")
        p.add_argument("--out", required=name == "report", metavar="PATH")
        p.add_argument("--lemma", action="store_true", help="also compare lcc with one isolated vertex added")
        p.add_argument("--no-cache", action="store_true")
        if name == "check":
            p.add_argument("--quiet", action="store_true", help="only print the summary")
        p.set_defaults(func=func)

    p = sub.add_parser("suite", help="run a construction over a graph stream")
    _add_source_args(p)
    p.add_argument("--method", required=True, choices=["alpha2", "max-clique", "local-alpha", "claw-free"])
    p.set_defaults(func=cmd_suite)

    for name, func in (("scp-bound", cmd_scp), ("cp-bound", cmd_cp)):
        p = sub.add_parser(name, help="triangle-packing bound for graph + complement")
        _add_graph_args(p)
        p.set_defaults(func=func)

    p = sub.add_parser("bounds", help="inequality checkers for one graph")
    _add_graph_args(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("validate", help="validate a cover given as a JSON list of vertex lists")
    _add_graph_args(p)
    p.add_argument("--cover", required=True, metavar="FILE")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
