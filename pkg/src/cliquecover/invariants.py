"""Exact classical invariants for small graphs.

All searches work on a candidate vertex mask inside a graph's adjacency tuple,
so neighbourhood-restricted questions (local independence, partitions of
N(u) into cliques) reuse the same code without building subgraphs.  Results
are memoised on ``(adj, mask)``; witnesses are deterministic.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, bits, lowest

_CACHE = 1 << 18


@lru_cache(maxsize=_CACHE)
def _max_independent(adj: tuple[int, ...], cand: int) -> int:
    """Maximum independent set inside ``cand``, branching on a highest-degree vertex."""
    best = 0
    best_size = 0

    def rec(p: int, chosen: int, size: int) -> None:
        nonlocal best, best_size
        if size + p.bit_count() <= best_size:
            return
        v, dv = -1, -1
        for u in bits(p):
            d = (adj[u] & p).bit_count()
            if d > dv:
                v, dv = u, d
        if dv <= 0:
            # p is independent (or empty): take all of it
            best, best_size = chosen | p, size + p.bit_count()
            return
        bit = 1 << v
        rec(p & ~adj[v] & ~bit, chosen | bit, size + 1)
        rec(p & ~bit, chosen, size)

    rec(cand, 0, 0)
    return best


@lru_cache(maxsize=_CACHE)
def _max_clique(adj: tuple[int, ...], cand: int) -> int:
    """Maximum clique inside ``cand`` by vertex-ordered expansion with a size bound."""
    best = 0
    best_size = 0

    def rec(p: int, chosen: int, size: int) -> None:
        nonlocal best, best_size
        if not p:
            if size > best_size:
                best, best_size = chosen, size
            return
        while p:
            if size + p.bit_count() <= best_size:
                return
            v = lowest(p)
            rec(p & adj[v], chosen | (1 << v), size + 1)
            p &= ~(1 << v)

    rec(cand, 0, 0)
    return best


def _greedy_classes(adj: tuple[int, ...], order: list[int]) -> list[int]:
    classes: list[int] = []
    for v in order:
        for i, cls in enumerate(classes):
            if not adj[v] & cls:
                classes[i] = cls | (1 << v)
                break
        else:
            classes.append(1 << v)
    return classes


def _k_colour(adj: tuple[int, ...], order: list[int], k: int) -> list[int] | None:
    classes = [0] * k

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in range(min(used + 1, k)):
            if not adj[v] & classes[c]:
                classes[c] |= 1 << v
                if rec(i + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
        return False

    return list(classes) if rec(0, 0) else None


@lru_cache(maxsize=_CACHE)
def _min_colouring(adj: tuple[int, ...], cand: int) -> tuple[int, ...]:
    """Colour classes of an optimal proper colouring of the graph induced by ``cand``."""
    if not cand:
        return ()
    order = sorted(bits(cand), key=lambda v: (-(adj[v] & cand).bit_count(), v))
    sub = tuple(nb & cand for nb in adj)
    upper = _greedy_classes(sub, order)
    lower = _max_clique(adj, cand).bit_count()
    for k in range(lower, len(upper)):
        found = _k_colour(sub, order, k)
        if found is not None:
            return tuple(sorted(found, key=lowest))
    return tuple(sorted(upper, key=lowest))


def _complement_adj(adj: tuple[int, ...], cand: int) -> tuple[int, ...]:
    return tuple((cand & ~nb & ~(1 << v)) if cand >> v & 1 else 0 for v, nb in enumerate(adj))


# public API ------------------------------------------------------------------


def maximum_independent_set(g: Graph) -> int:
    return _max_independent(g.adj, g.vertex_mask)


def independence_number(g: Graph) -> int:
    return maximum_independent_set(g).bit_count()


def maximum_clique(g: Graph) -> int:
    return _max_clique(g.adj, g.vertex_mask)


def clique_number(g: Graph) -> int:
    return maximum_clique(g).bit_count()


def optimal_colouring(g: Graph) -> list[int]:
    """Colour index per vertex for a colouring with exactly chi(g) colours."""
    colour = [0] * g.n
    for c, cls in enumerate(_min_colouring(g.adj, g.vertex_mask)):
        for v in bits(cls):
            colour[v] = c
    return colour


def chromatic_number(g: Graph) -> int:
    return len(_min_colouring(g.adj, g.vertex_mask))


def local_alpha(g: Graph, v: int) -> int:
    """Independence number of the subgraph induced by N(v)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")
    return _max_independent(g.adj, g.adj[v]).bit_count()


def local_alphas(g: Graph) -> list[int]:
    return [_max_independent(g.adj, nb).bit_count() for nb in g.adj]


def local_independence_number(g: Graph) -> int:
    return max(local_alphas(g), default=0)


def find_claw(g: Graph) -> tuple[int, tuple[int, int, int]] | None:
    """First induced K_{1,3} as ``(centre, leaves)``, or None if g is claw-free."""
    adj = g.adj
    for v in range(g.n):
        nb = adj[v]
        for a in bits(nb):
            rest_a = nb & ~adj[a] & ~((2 << a) - 1)
            for b in bits(rest_a):
                rest_b = rest_a & ~adj[b] & ~((2 << b) - 1)
                if rest_b:
                    return v, (a, b, lowest(rest_b))
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def vertex_clique_partition(g: Graph, s: int) -> list[int]:
    """Split ``s`` into the fewest cliques of g, via an optimal colouring of the complement of g[s]."""
    if s & ~g.vertex_mask:
        raise ValueError("vertex set not contained in the graph")
    return list(_min_colouring(_complement_adj(g.adj, s), s))


def maximum_matching(g: Graph, s: int | None = None) -> list[tuple[int, int]]:
    """Maximum-cardinality matching of g[s] (whole graph by default).

    Exhaustive recursion on the lowest unmatched vertex, memoised on the set of
    still-available vertices.  Intended for small vertex sets.
    """
    adj = g.adj
    memo: dict[int, tuple[int, tuple[tuple[int, int], ...]]] = {}

    def rec(avail: int) -> tuple[int, tuple[tuple[int, int], ...]]:
        if avail in memo:
            return memo[avail]
        # vertices with no available neighbour can never be matched
        while avail and not adj[lowest(avail)] & avail:
            avail &= avail - 1
        if not avail:
            return 0, ()
        v = lowest(avail)
        rest = avail & ~(1 << v)
        best = rec(rest)
        for u in bits(adj[v] & rest):
            size, pairs = rec(rest & ~(1 << u))
            if size + 1 > best[0]:
                best = (size + 1, ((v, u),) + pairs)
        memo[avail] = best
        return best

    return list(rec(g.vertex_mask if s is None else s)[1])
