"""Nordhaus-Gaddum style accounting and inequality checkers.

The clique-partition bounds come from packing edge-disjoint monochromatic
triangles in the red/blue colouring of K_n given by a graph and its
complement.  The asymptotic constants below are carried only as reference
lines for reports; nothing here attempts to reproduce them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .cover import CliquePartition, lcc, validate_partition
from .graph import Graph, complement, emit_graph6
from .invariants import (
    chromatic_number,
    clique_number,
    independence_number,
    local_independence_number,
)

ORIGINAL = "original"
COMPLEMENT = "complement"

# reference constants (asymptotic, not reproduced)
TRIANGLE_DENSITY = Fraction(365, 4704)
SCP_SUM_COEFF = 1 - 3 * TRIANGLE_DENSITY  # 1203/1568
CP_SUM_COEFF = Fraction(1, 2) - 2 * TRIANGLE_DENSITY  # 811/2352
SCP_SUM_COEFF_PRIOR = Fraction(9, 10)
CP_SUM_COEFF_PRIOR = Fraction(13, 30)


@dataclass(frozen=True)
class TrianglePacking:
    n: int
    triangles: tuple[tuple[tuple[int, int, int], str], ...]

    @property
    def k(self) -> int:
        return len(self.triangles)

    @property
    def m(self) -> int:
        return 3 * self.k


def pack_monochromatic_triangles(g: Graph) -> TrianglePacking:
    """Greedy maximal packing: scan triples lexicographically, keep monochromatic edge-disjoint ones."""
    n = g.n
    adj = g.adj
    used = [0] * n
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            if used[a] >> b & 1:
                continue
            ab = adj[a] >> b & 1
            for c in range(b + 1, n):
                if used[a] >> c & 1 or used[b] >> c & 1:
                    continue
                if adj[a] >> c & 1 == ab and adj[b] >> c & 1 == ab:
                    out.append(((a, b, c), ORIGINAL if ab else COMPLEMENT))
                    used[a] |= (1 << b) | (1 << c)
                    used[b] |= (1 << a) | (1 << c)
                    used[c] |= (1 << a) | (1 << b)
                    break
    return TrianglePacking(n, tuple(out))


def check_packing(g: Graph, packing: TrianglePacking) -> bool:
    """Every triangle monochromatic in its stated colour, triangles pairwise edge-disjoint."""
    seen: set[tuple[int, int]] = set()
    for (a, b, c), colour in packing.triangles:
        want = colour == ORIGINAL
        for u, v in ((a, b), (a, c), (b, c)):
            if g.has_edge(u, v) != want or (u, v) in seen or u == v:
                return False
            seen.add((u, v))
    return True


@dataclass(frozen=True)
class PackingBound:
    kind: str
    n: int
    bound: int
    packing: TrianglePacking
    partitions: tuple[CliquePartition, CliquePartition]
    reference: float
    reference_prior: float

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "k": self.packing.k,
            "m": self.packing.m,
            "realized_bound": self.bound,
            "triangles": [{"vertices": list(t), "colour": c} for t, c in self.packing.triangles],
            "partition": [p.vertex_lists() for p in self.partitions],
            "asymptotic_reference_only": self.reference,
            "prior_asymptotic_reference_only": self.reference_prior,
        }


def _partitions(g: Graph, packing: TrianglePacking) -> tuple[CliquePartition, CliquePartition]:
    parts: dict[str, list[int]] = {ORIGINAL: [], COMPLEMENT: []}
    used: set[tuple[int, int]] = set()
    for (a, b, c), colour in packing.triangles:
        parts[colour].append((1 << a) | (1 << b) | (1 << c))
        used.update(((a, b), (a, c), (b, c)))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (u, v) not in used:
                parts[ORIGINAL if g.has_edge(u, v) else COMPLEMENT].append((1 << u) | (1 << v))
    return CliquePartition(g.n, tuple(parts[ORIGINAL])), CliquePartition(g.n, tuple(parts[COMPLEMENT]))


def scp_ng_bound(g: Graph) -> PackingBound:
    """Explicit partitions of E(g) and E(complement) with total size n(n-1) - 3k."""
    packing = pack_monochromatic_triangles(g)
    pg, pc = _partitions(g, packing)
    bound = pg.sigma + pc.sigma
    assert bound == g.n * (g.n - 1) - packing.m
    n2 = g.n * g.n
    return PackingBound("scp", g.n, bound, packing, (pg, pc), float(SCP_SUM_COEFF * n2), float(SCP_SUM_COEFF_PRIOR * n2))


def cp_ng_bound(g: Graph) -> PackingBound:
    """Same partitions counted by number of parts: C(n,2) + k - m."""
    packing = pack_monochromatic_triangles(g)
    pg, pc = _partitions(g, packing)
    bound = len(pg) + len(pc)
    assert bound == comb(g.n, 2) + packing.k - packing.m
    n2 = g.n * g.n
    return PackingBound("cp", g.n, bound, packing, (pg, pc), float(CP_SUM_COEFF * n2), float(CP_SUM_COEFF_PRIOR * n2))


def partitions_valid(g: Graph, result: PackingBound) -> bool:
    pg, pc = result.partitions
    return validate_partition(g, pg).valid and validate_partition(complement(g), pc).valid


# inequality checkers -------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    bound: str
    graph6: str
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        def num(x: Fraction) -> int | str:
            return x.numerator if x.denominator == 1 else str(x)

        return {
            "graph6": self.graph6,
            "bound": self.bound,
            "lhs": num(self.lhs),
            "rhs": num(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "witnesses": self.witnesses,
        }


def check_near_regular(g: Graph) -> Verdict:
    """Degrees within {k, k+1}: lcc(g) <= k+1, lcc(complement) <= n-1-k, sum <= n."""
    lo, hi = g.min_degree(), g.max_degree()
    if g.n == 0 or hi > lo + 1:
        raise ValueError("graph is not near-regular (degrees span more than two values)")
    k = lo
    a, b = lcc(g), lcc(complement(g))
    ok = a <= k + 1 and b <= g.n - 1 - k and a + b <= g.n
    return Verdict(
        "near_regular", emit_graph6(g), Fraction(a + b), Fraction(g.n), ok, a + b == g.n,
        {"k": k, "lcc": a, "lcc_complement": b},
    )


def is_complete(g: Graph) -> bool:
    return all(d == g.n - 1 for d in g.degrees())


def is_star(g: Graph) -> bool:
    """Labelled K_{1,n-1}: one vertex adjacent to all others, no other edges."""
    if g.n < 2:
        return False
    degs = g.degrees()
    centres = [v for v, d in enumerate(degs) if d == g.n - 1]
    return bool(centres) and g.edge_count() == g.n - 1


def check_ratio_bound(g: Graph) -> Verdict:
    """max degree/(omega-1) + chi <= n+1, with equality exactly for K_n and K_{1,n-1}."""
    omega = clique_number(g)
    if omega < 2:
        raise ValueError("ratio bound needs at least one edge")
    lhs = Fraction(g.max_degree(), omega - 1) + chromatic_number(g)
    rhs = Fraction(g.n + 1)
    extremal = is_complete(g) or is_star(g)
    eq = lhs == rhs
    return Verdict(
        "ratio", emit_graph6(g), lhs, rhs, lhs <= rhs and eq == extremal, eq,
        {"complete": is_complete(g), "star": is_star(g)},
    )


def split_vertex(g: Graph) -> int | None:
    """First v with N(v) a clique and V - N(v) independent."""
    for v in range(g.n):
        if g.is_clique(g.adj[v]) and g.is_independent(g.vertex_mask & ~g.adj[v]):
            return v
    return None


def check_alpha_chi_bound(g: Graph) -> Verdict:
    """alpha + chi <= n+1, equality iff some split vertex exists."""
    lhs = Fraction(independence_number(g) + chromatic_number(g))
    rhs = Fraction(g.n + 1)
    v = split_vertex(g)
    eq = lhs == rhs
    return Verdict("alpha_chi", emit_graph6(g), lhs, rhs, lhs <= rhs and eq == (v is not None), eq, {"vertex": v})


def check_corollary_alpha(g: Graph) -> Verdict:
    """lcc + n/alpha_L <= n+1 and lcc + n/alpha <= n+1."""
    if g.edge_count() == 0:
        raise ValueError("corollary check needs at least one edge")
    k = lcc(g)
    lhs_local = k + Fraction(g.n, local_independence_number(g))
    lhs_global = k + Fraction(g.n, independence_number(g))
    rhs = Fraction(g.n + 1)
    return Verdict(
        "corollary_alpha", emit_graph6(g), lhs_local, rhs, lhs_local <= rhs and lhs_global <= rhs, lhs_local == rhs,
        {"lcc": k, "lhs_alpha": str(lhs_global)},
    )

