"""Simple undirected graphs on vertices ``0..n-1`` with bit-mask adjacency.

Vertex sets are plain ``int`` bit masks throughout the package: bit ``v`` set
means vertex ``v`` is a member.  This keeps set algebra to single machine-word
operations for the sizes we care about (n <= 64).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64
GRAPH6_MAX_EMIT = 62


class GraphError(ValueError):
    """Raised for malformed graph input."""


def _bits_slow(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


_SMALL = 1 << 10
_BITS_TABLE = tuple(tuple(_bits_slow(m)) for m in range(_SMALL))


def bits(mask: int) -> Iterable[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    if 0 <= mask < _SMALL:
        return _BITS_TABLE[mask]
    return _bits_slow(mask)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the open neighbourhood N(v) as a mask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed_nbhd(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def is_clique(self, s: int) -> bool:
        for v in bits(s):
            if (s & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_independent(self, s: int) -> bool:
        return all(not (self.adj[v] & s) for v in bits(s))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, list[int]]:
    """Return ``g[s]`` relabelled to ``0..|s|-1`` and the list mapping new -> old labels."""
    if s & ~g.vertex_mask:
        raise GraphError("vertex set not contained in the graph")
    old = list(bits(s))
    new_of = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        adj.append(mask_of(new_of[u] for u in bits(g.adj[v] & s)))
    return Graph(len(old), tuple(adj)), old


def delete_vertices(g: Graph, s: int) -> tuple[Graph, list[int]]:
    return induced_subgraph(g, g.vertex_mask & ~s)


def disjoint_union_with_isolated(g: Graph) -> Graph:
    if g.n >= MAX_VERTICES:
        raise GraphError(f"cannot add a vertex: capacity {MAX_VERTICES} reached")
    return Graph(g.n + 1, g.adj + (0,))


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def remove_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


# graph6 ---------------------------------------------------------------------


def _graph6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphError("malformed graph6: empty string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphError("malformed graph6: truncated size header")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise GraphError("malformed graph6: truncated size header")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphError("malformed graph6: non-ASCII character") from exc
    if any(c < 63 or c > 126 for c in data):
        raise GraphError("malformed graph6: byte outside 63..126")
    n, offset = _graph6_size(data)
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 encodes {n} vertices; at most {MAX_VERTICES} supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[offset:]
    if len(payload) < need:
        raise GraphError("malformed graph6: truncated bit payload")
    if len(payload) > need:
        raise GraphError("malformed graph6: trailing bytes after payload")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (payload[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_EMIT:
        raise GraphError(f"graph6 single-byte header supports n <= {GRAPH6_MAX_EMIT}, got {n}")
    out = [chr(n + 63)]
    acc = 0
    k = 0
    adj = g.adj
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (adj[i] >> j & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


# edge-list text ---------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-indexed)."""
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed edge list: {exc}") from exc
    if len(edges) != m or any(len(r) != 2 for r in rows[1:]):
        raise GraphError(f"edge list header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    es = g.edges()
    return "\n".join([f"{g.n} {len(es)}"] + [f"{u} {v}" for u, v in es]) + "\n"
