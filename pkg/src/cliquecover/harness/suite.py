"""Apply one construction to a stream of graphs and tally certificate verdicts."""

from __future__ import annotations

import multiprocessing
from collections import Counter
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable

from ..constructions import METHODS, ConstructionError, PreconditionError, TheoremGapError, applies, build
from ..graph import Graph, emit_graph6, parse_graph6

BLOCK = 8192


@dataclass
class SuiteSummary:
    method: str
    total: int = 0
    applied: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)
    errors: list[tuple[str, str]] = field(default_factory=list)
    skipped: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return self.applied == self.passed and not self.errors

    def as_dict(self) -> dict:
        return {
            "method": self.method,
            "total": self.total,
            "applied": self.applied,
            "passed": self.passed,
            "failures": self.failures,
            "errors": [list(e) for e in self.errors],
            "skipped": dict(self.skipped),
        }


def _run_one(args: tuple[str, str]) -> tuple[str, str]:
    method, key = args
    g = parse_graph6(key)
    reason = applies(method, g)
    if reason is not None:
        return "skip", reason
    try:
        cert = build(method, g)
    except (PreconditionError, TheoremGapError, ConstructionError) as exc:
        return "error", f"{type(exc).__name__}: {exc}"
    return ("pass", "") if cert.verdict else ("fail", "")


def run_construction_suite(graphs: Iterable[Graph], method: str, workers: int = 1) -> SuiteSummary:
    method = method.replace("-", "_")
    if method not in METHODS or method == "exact":
        raise ValueError(f"unknown construction {method!r}")
    summary = SuiteSummary(method)
    pool = multiprocessing.get_context("fork").Pool(workers) if workers > 1 else None
    try:
        it = iter(graphs)
        while True:
            keys = [emit_graph6(g) for g in islice(it, BLOCK)]
            if not keys:
                break
            jobs = [(method, k) for k in keys]
            results = pool.map(_run_one, jobs, chunksize=64) if pool else map(_run_one, jobs)
            for key, (status, info) in zip(keys, results):
                summary.total += 1
                if status == "skip":
                    summary.skipped[info] += 1
                    continue
                summary.applied += 1
                if status == "pass":
                    summary.passed += 1
                elif status == "fail":
                    summary.failures.append(key)
                else:
                    summary.errors.append((key, info))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return summary
