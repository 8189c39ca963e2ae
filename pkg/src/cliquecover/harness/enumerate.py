"""Labelled graph streams indexed by edge masks."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from ..graph import Graph

EXHAUSTIVE_MAX_N = 7


def edge_order(n: int) -> list[tuple[int, int]]:
    """Bit ``i`` of an edge mask stands for the ``i``-th pair in lexicographic order."""
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int, order: list[tuple[int, int]] | None = None) -> Graph:
    adj = [0] * n
    for i, (u, v) in enumerate(order or edge_order(n)):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def mask_of_graph(g: Graph) -> int:
    return sum(1 << i for i, (u, v) in enumerate(edge_order(g.n)) if g.has_edge(u, v))


def count_labeled_graphs(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices exactly once, in edge-mask order."""
    if not 0 <= n <= EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive enumeration supports n <= {EXHAUSTIVE_MAX_N}, got {n}")
    order = edge_order(n)
    end = count_labeled_graphs(n) if stop is None else stop
    for mask in range(start, end):
        yield graph_from_mask(n, mask, order)


def random_graphs(n: int, count: int, seed: int = 0, p: float = 0.5) -> Iterator[Graph]:
    rng = random.Random(seed)
    order = edge_order(n)
    for _ in range(count):
        adj = [0] * n
        for u, v in order:
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))
