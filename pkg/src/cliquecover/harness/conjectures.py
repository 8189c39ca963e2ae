"""Conjecture sweeps: lcc(G)+lcc(complement) <= n and lcc(G)+chi(G) <= n+1."""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Iterator

from ..cover import lcc
from ..graph import Graph, complement, disjoint_union_with_isolated, emit_graph6, parse_graph6
from ..invariants import chromatic_number, clique_number, independence_number
from .cache import Bundle, BundleCache, CacheMismatchError

BLOCK = 4096


def compute_bundle(key: str) -> Bundle:
    g = parse_graph6(key)
    return Bundle(lcc(g), chromatic_number(g), independence_number(g), clique_number(g))


def _lemma_holds(key: str) -> bool:
    g = parse_graph6(key)
    return lcc(disjoint_union_with_isolated(g)) == lcc(g)


@dataclass(frozen=True)
class ConjectureReport:
    graph6: str
    n: int
    lcc: int
    lcc_complement: int
    chi: int
    lemma_holds: bool | None = None
    method: str = "exact"

    @property
    def conj1_lhs(self) -> int:
        return self.lcc + self.lcc_complement

    @property
    def conj2_lhs(self) -> int:
        return self.lcc + self.chi

    @property
    def conj1_holds(self) -> bool:
        return self.conj1_lhs <= self.n

    @property
    def conj2_holds(self) -> bool:
        return self.conj2_lhs <= self.n + 1

    @property
    def equality1(self) -> bool:
        return self.conj1_lhs == self.n

    @property
    def equality2(self) -> bool:
        return self.conj2_lhs == self.n + 1

    def row(self) -> dict:
        rec = {
            "graph6": self.graph6,
            "n": self.n,
            "lcc": self.lcc,
            "lcc_complement": self.lcc_complement,
            "chi": self.chi,
            "conj1_lhs": self.conj1_lhs,
            "conj1_holds": self.conj1_holds,
            "conj2_lhs": self.conj2_lhs,
            "conj2_holds": self.conj2_holds,
            "equality2": self.equality2,
            "equality1": self.equality1,
            "method": self.method,
        }
        if self.lemma_holds is not None:
            rec["lemma_holds"] = self.lemma_holds
        return rec


@dataclass
class Summary:
    conjectures: tuple[int, ...] = (1, 2)
    total: int = 0
    conj1_violations: int = 0
    conj2_violations: int = 0
    equality1: int = 0
    equality2: int = 0
    lemma_failures: int = 0
    errors: list[tuple[str, str]] = field(default_factory=list)
    violators: list[str] = field(default_factory=list)

    def add(self, r: ConjectureReport) -> None:
        self.total += 1
        self.equality1 += r.equality1
        self.equality2 += r.equality2
        bad = False
        if not r.conj1_holds:
            self.conj1_violations += 1
            bad = bad or 1 in self.conjectures
        if not r.conj2_holds:
            self.conj2_violations += 1
            bad = bad or 2 in self.conjectures
        if r.lemma_holds is False:
            self.lemma_failures += 1
        if bad:
            self.violators.append(r.graph6)

    @property
    def violations(self) -> int:
        return len(self.violators)

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "conjectures": list(self.conjectures),
            "conj1_violations": self.conj1_violations,
            "conj2_violations": self.conj2_violations,
            "equality1": self.equality1,
            "equality2": self.equality2,
            "lemma_failures": self.lemma_failures,
            "errors": len(self.errors),
            "violators": self.violators,
        }


@dataclass
class SweepStats:
    solver_calls: int = 0
    cache_hits: int = 0
    audited: int = 0


class Sweeper:
    """Computes reports for a graph stream, in input order, with optional worker processes."""

    def __init__(self, workers: int = 1, cache: BundleCache | None = None, lemma: bool = False):
        self.workers = max(1, workers)
        self.cache = cache if cache is not None else BundleCache(None, audit_rate=0.0)
        self.lemma = lemma
        self.stats = SweepStats()
        self._pool = None

    def __enter__(self) -> "Sweeper":
        if self.workers > 1:
            self._pool = multiprocessing.get_context("fork").Pool(self.workers)
        return self

    def __exit__(self, *exc) -> None:
        if self._pool is not None:
            self._pool.close()
            self._pool.join()
            self._pool = None

    def _map(self, fn, keys: list[str]) -> list:
        if self._pool is None or len(keys) < 2:
            return [fn(k) for k in keys]
        chunk = max(1, len(keys) // (self.workers * 8))
        return self._pool.map(fn, keys, chunksize=chunk)

    def _bundles(self, keys: list[str]) -> dict[str, Bundle]:
        out: dict[str, Bundle] = {}
        missing: list[str] = []
        audit: list[str] = []
        for k in dict.fromkeys(keys):
            b = self.cache.get(k)
            if b is None:
                missing.append(k)
            else:
                out[k] = b
                self.stats.cache_hits += 1
                if self.cache.should_audit():
                    audit.append(k)
        fresh = self._map(compute_bundle, missing)
        self.stats.solver_calls += len(missing)
        self.cache.put_many(list(zip(missing, fresh)))
        out.update(zip(missing, fresh))
        for k, b in zip(audit, self._map(compute_bundle, audit)):
            self.stats.audited += 1
            if b != out[k]:
                raise CacheMismatchError(f"cached bundle for {k} is {out[k]}, recomputed {b}")
        return out

    def reports(self, graphs: Iterable[Graph], errors: list[tuple[str, str]] | None = None) -> Iterator[ConjectureReport]:
        it = iter(graphs)
        while True:
            block = list(islice(it, BLOCK))
            if not block:
                return
            pairs = []
            for g in block:
                try:
                    pairs.append((emit_graph6(g), emit_graph6(complement(g)), g.n))
                except ValueError as exc:
                    if errors is None:
                        raise
                    errors.append((repr(g), str(exc)))
            bundles = self._bundles([k for a, b, _ in pairs for k in (a, b)])
            lemma = self._map(_lemma_holds, [a for a, _, _ in pairs]) if self.lemma else [None] * len(pairs)
            for (a, b, n), ok in zip(pairs, lemma):
                yield ConjectureReport(a, n, bundles[a].lcc, bundles[b].lcc, bundles[a].chi, ok)


def check_conjectures(
    graphs: Iterable[Graph],
    conjectures: tuple[int, ...] = (1, 2),
    workers: int = 1,
    cache: BundleCache | None = None,
    lemma: bool = False,
) -> tuple[list[ConjectureReport], Summary]:
    """Run the sweep to completion; convenient for tests and small inputs."""
    summary = Summary(conjectures)
    with Sweeper(workers, cache, lemma) as sw:
        reports = list(sw.reports(graphs, summary.errors))
    for r in reports:
        summary.add(r)
    return reports, summary
