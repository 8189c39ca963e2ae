"""Clique covers and clique partitions: data model, validation and exact solvers.

Cliques are vertex masks.  The exact solvers are the ground truth used by
every checker in the package, so they favour plain exhaustive search with
sound pruning over cleverness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .graph import Graph, bits, lowest
from .invariants import clique_number, local_independence_number

EXACT_PARTITION_MAX_N = 8


class SizeGuardError(ValueError):
    """Input exceeds the size an exact solver is willing to handle."""


def _valency(n: int, cliques: tuple[int, ...]) -> tuple[int, ...]:
    val = [0] * n
    for c in cliques:
        for v in bits(c):
            val[v] += 1
    return tuple(val)


@dataclass(frozen=True)
class CliqueCover:
    n: int
    cliques: tuple[int, ...]
    valency: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.valency:
            object.__setattr__(self, "valency", _valency(self.n, self.cliques))

    @property
    def max_valency(self) -> int:
        return max(self.valency, default=0)

    def vertex_lists(self) -> list[list[int]]:
        return [list(bits(c)) for c in self.cliques]


@dataclass(frozen=True)
class CliquePartition:
    n: int
    cliques: tuple[int, ...]

    @property
    def sigma(self) -> int:
        return sum(c.bit_count() for c in self.cliques)

    def __len__(self) -> int:
        return len(self.cliques)

    def vertex_lists(self) -> list[list[int]]:
        return [list(bits(c)) for c in self.cliques]


@dataclass(frozen=True)
class CoverCheck:
    valid: bool
    max_valency: int
    per_vertex: tuple[int, ...]
    problem: str | None = None
    witness: tuple[int, int] | None = None


def _non_edge_in(g: Graph, c: int) -> tuple[int, int] | None:
    for v in bits(c):
        bad = c & ~g.adj[v] & ~(1 << v) & ~((1 << v) - 1)
        if bad:
            return v, lowest(bad)
    return None


def _check_members(g: Graph, cliques: tuple[int, ...]) -> None:
    full = g.vertex_mask
    for c in cliques:
        if c & ~full:
            raise ValueError(f"clique {list(bits(c))} has vertices outside 0..{g.n - 1}")


def validate_cover(g: Graph, cover: CliqueCover) -> CoverCheck:
    """Check every clique is complete and every edge covered; recompute valencies."""
    _check_members(g, cover.cliques)
    per_vertex = [0] * g.n
    covered = [0] * g.n
    for c in cover.cliques:
        for v in bits(c):
            per_vertex[v] += 1
            covered[v] |= c
    per = tuple(per_vertex)
    mx = max(per, default=0)
    for c in cover.cliques:
        if not c:
            return CoverCheck(False, mx, per, "empty clique")
        pair = _non_edge_in(g, c)
        if pair is not None:
            return CoverCheck(False, mx, per, "clique contains a non-edge", pair)
    for v in range(g.n):
        missing = g.adj[v] & ~covered[v]
        if missing:
            return CoverCheck(False, mx, per, "uncovered edge", (v, lowest(missing)))
    if cover.valency != per:
        return CoverCheck(False, mx, per, "stored valency disagrees with cliques")
    return CoverCheck(True, mx, per)


def validate_partition(g: Graph, part: CliquePartition) -> CoverCheck:
    """Like :func:`validate_cover` but every edge must lie in exactly one clique."""
    _check_members(g, part.cliques)
    per = _valency(g.n, part.cliques)
    mx = max(per, default=0)
    seen = [0] * g.n
    for c in part.cliques:
        if not c:
            return CoverCheck(False, mx, per, "empty clique")
        pair = _non_edge_in(g, c)
        if pair is not None:
            return CoverCheck(False, mx, per, "clique contains a non-edge", pair)
        for v in bits(c):
            twice = seen[v] & c & ~(1 << v)
            if twice:
                return CoverCheck(False, mx, per, "edge covered twice", (v, lowest(twice)))
            seen[v] |= c & ~(1 << v)
    for v in range(g.n):
        missing = g.adj[v] & ~seen[v]
        if missing:
            return CoverCheck(False, mx, per, "uncovered edge", (v, lowest(missing)))
    return CoverCheck(True, mx, per)


def _cliques_within(adj: tuple[int, ...], p: int, cur: int = 0) -> Iterator[int]:
    """Every clique (including the empty one) inside candidate mask ``p``."""
    yield cur
    while p:
        w = lowest(p)
        p &= ~(1 << w)
        yield from _cliques_within(adj, p & adj[w], cur | (1 << w))


def _decide(adj: tuple[int, ...], k: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    n = len(adj)
    unc = list(adj)
    val = [0] * n
    chosen: list[int] = []
    failed: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()

    def hopeless() -> bool:
        # Each vertex of an independent set inside the still-uncovered
        # neighbourhood of w needs its own clique through w.
        for w in range(n):
            r = unc[w]
            if not r:
                continue
            if val[w] >= k:
                return True
            need = 0
            while r:
                x = lowest(r)
                need += 1
                r &= ~adj[x] & ~(1 << x)
            if val[w] + need > k:
                return True
        return False

    def rec() -> bool:
        u = next((x for x in range(n) if unc[x]), -1)
        if u < 0:
            return True
        key = (tuple(unc), tuple(val))
        if key in failed or hopeless():
            return False
        v = lowest(unc[u])
        allowed = 0
        for x in range(n):
            if val[x] < k:
                allowed |= 1 << x
        base = (1 << u) | (1 << v)
        options = []
        for s in _cliques_within(adj, adj[u] & adj[v] & allowed):
            c = s | base
            # a member covering no new edge can be dropped without loss
            if all(unc[w] & c for w in bits(s)):
                options.append(c)
        options.sort(key=lambda c: (-c.bit_count(), c))
        for c in options:
            saved = [(x, unc[x]) for x in bits(c)]
            for x, old in saved:
                unc[x] = old & ~c
                val[x] += 1
            chosen.append(c)
            if rec():
                return True
            chosen.pop()
            for x, old in saved:
                unc[x] = old
                val[x] -= 1
        failed.add(key)
        return False

    if rec():
        return tuple(chosen), tuple(val)
    return None


def lcc_decide(g: Graph, k: int) -> CliqueCover | None:
    """A clique cover with every valency at most ``k``, or None if none exists."""
    if k < 0:
        raise ValueError("k must be non-negative")
    found = _decide(g.adj, k)
    if found is None:
        return None
    cliques, val = found
    return CliqueCover(g.n, cliques, val)


@lru_cache(maxsize=1 << 17)
def _lcc(adj: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    g = Graph(len(adj), adj)
    delta = g.max_degree()
    if delta == 0:
        return 0, ()
    omega = clique_number(g)
    lower = max(local_independence_number(g), -(-delta // (omega - 1)))
    for k in range(lower, delta):
        found = _decide(adj, k)
        if found is not None:
            return k, found[0]
    return delta, tuple((1 << a) | (1 << b) for a, b in g.edges())


def lcc_exact(g: Graph) -> tuple[int, CliqueCover]:
    """Local clique cover number of g with an optimal witness cover."""
    k, cliques = _lcc(g.adj)
    return k, CliqueCover(g.n, cliques)


def lcc(g: Graph) -> int:
    return _lcc(g.adj)[0]


# clique partitions -------------------------------------------------------------


def _partition_search(adj: tuple[int, ...], weighted: bool) -> tuple[int, tuple[int, ...]]:
    n = len(adj)
    memo: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}

    def rec(unc: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        u = next((x for x in range(n) if unc[x]), -1)
        if u < 0:
            return 0, ()
        if unc in memo:
            return memo[unc]
        v = lowest(unc[u])
        base = (1 << u) | (1 << v)
        best: tuple[int, tuple[int, ...]] | None = None
        for s in _cliques_within(unc, unc[u] & unc[v]):
            c = s | base
            nxt = tuple(m & ~c if c >> x & 1 else m for x, m in enumerate(unc))
            cost, rest = rec(nxt)
            cost += c.bit_count() if weighted else 1
            if best is None or cost < best[0]:
                best = (cost, (c,) + rest)
        assert best is not None
        memo[unc] = best
        return best

    return rec(adj)


def _guard(g: Graph) -> None:
    if g.n > EXACT_PARTITION_MAX_N:
        raise SizeGuardError(f"exact partition solvers accept n <= {EXACT_PARTITION_MAX_N}, got n = {g.n}")


def scp_exact(g: Graph) -> tuple[int, CliquePartition]:
    """Minimum total clique size over clique partitions of E(g)."""
    _guard(g)
    sigma, cliques = _partition_search(g.adj, weighted=True)
    return sigma, CliquePartition(g.n, cliques)


def cp_exact(g: Graph) -> tuple[int, CliquePartition]:
    """Minimum number of cliques in a clique partition of E(g)."""
    _guard(g)
    count, cliques = _partition_search(g.adj, weighted=False)
    return count, CliquePartition(g.n, cliques)
