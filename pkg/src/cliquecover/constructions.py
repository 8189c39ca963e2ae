"""Constructive clique covers with per-construction valency certificates.

Each builder returns a :class:`CoverCertificate`: the cover, the bound it
claims and whether the claim checks out.  Where a pair or triple of vertices
has to be chosen, the lexicographically smallest qualifying one is taken.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cover import CliqueCover, lcc_exact, validate_cover
from .graph import Graph, bits, delete_vertices, emit_graph6, lowest, mask_of
from .invariants import (
    chromatic_number,
    clique_number,
    find_claw,
    independence_number,
    local_alphas,
    maximum_clique,
    maximum_matching,
    vertex_clique_partition,
)

METHODS = ("alpha2", "max_clique", "local_alpha", "claw_free", "exact")


class PreconditionError(ValueError):
    """The graph does not satisfy what a construction assumes."""


class TheoremGapError(RuntimeError):
    """No adjacent pair with the required chromatic remainder exists."""


class ConstructionError(AssertionError):
    """An internal step of a construction did not behave as its argument requires."""


@dataclass(frozen=True)
class CoverCertificate:
    graph6: str
    method: str
    cover: CliqueCover
    bound: int | dict[int, Fraction]
    verdict: bool
    note: str = ""

    def to_json(self) -> dict:
        if isinstance(self.bound, dict):
            bound: object = {str(v): _num(b) for v, b in sorted(self.bound.items())}
        else:
            bound = self.bound
        return {
            "graph6": self.graph6,
            "method": self.method,
            "bound": bound,
            "max_valency": self.cover.max_valency,
            "valency": list(self.cover.valency),
            "cliques": self.cover.vertex_lists(),
            "verdict": self.verdict,
            "note": self.note,
        }


def _num(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else str(x)


@dataclass(frozen=True)
class SplitPair:
    u1: int
    u2: int
    chi_remainder: int


def _edge(a: int, b: int) -> int:
    return (1 << a) | (1 << b)


def _fill_uncovered(g: Graph, cliques: list[int]) -> list[int]:
    """Append every edge not yet inside some clique as a K_2."""
    covered = [0] * g.n
    for c in cliques:
        for v in bits(c):
            covered[v] |= c
    out = list(cliques)
    for u, v in g.edges():
        if not covered[u] >> v & 1:
            out.append(_edge(u, v))
    return out


def _lift(cliques: tuple[int, ...], labels: list[int]) -> list[int]:
    return [mask_of(labels[i] for i in bits(c)) for c in cliques]


def _certify(g: Graph, method: str, cliques: list[int], bound: int, note: str = "") -> CoverCertificate:
    cover = CliqueCover(g.n, tuple(cliques))
    check = validate_cover(g, cover)
    return CoverCertificate(emit_graph6(g), method, cover, bound, check.valid and check.max_valency <= bound, note)


# alpha(G) = 2 ----------------------------------------------------------------------


def cover_alpha2(g: Graph) -> CoverCertificate:
    """Cover with max valency <= delta(g)+1 for graphs with independence number 2."""
    if g.n < 2 or independence_number(g) != 2:
        raise PreconditionError("cover_alpha2 needs n >= 2 and independence number exactly 2")
    degs = g.degrees()
    delta = min(degs)
    v = degs.index(delta)
    far = g.vertex_mask & ~g.closed_nbhd(v)
    cliques = []
    for u in bits(g.adj[v]):
        c = (g.adj[u] & far) | (1 << u)
        if c.bit_count() > 1:
            cliques.append(c)
    if far.bit_count() > 1:
        cliques.append(far)
    cliques = _fill_uncovered(g, cliques)
    cert = _certify(g, "alpha2", cliques, delta + 1, note=f"min-degree vertex {v}")
    if cert.cover.valency[v] != delta:
        return CoverCertificate(cert.graph6, cert.method, cert.cover, cert.bound, False, f"valency of {v} differs from its degree")
    return cert


# maximum clique ----------------------------------------------------------------------


def _max_clique_cliques(g: Graph) -> list[int]:
    k = maximum_clique(g)
    cliques = []
    for v in bits(g.vertex_mask & ~k):
        c = (g.adj[v] & k) | (1 << v)
        if c.bit_count() > 1:
            cliques.append(c)
    if k.bit_count() > 1:
        cliques.append(k)
    return _fill_uncovered(g, cliques)


def cover_max_clique(g: Graph) -> CoverCertificate:
    """Cover with max valency <= n+1-omega(g), built around one maximum clique."""
    if g.n == 0:
        return _certify(g, "max_clique", [], 0)
    return _certify(g, "max_clique", _max_clique_cliques(g), g.n + 1 - clique_number(g))


# local independence ---------------------------------------------------------------------


def local_alpha_bounds(g: Graph) -> dict[int, Fraction]:
    """Per non-isolated vertex v, the largest valency allowed: n+1 - n/alpha_G(v)."""
    return {v: g.n + 1 - Fraction(g.n, a) for v, a in enumerate(local_alphas(g)) if a > 0}


def _matching_parts(g: Graph, s: int) -> list[int]:
    """Split ``s`` into matched adjacent pairs and unmatched singletons."""
    parts = []
    for a, b in maximum_matching(g, s):
        parts.append(_edge(a, b))
        s &= ~_edge(a, b)
    parts.extend(1 << w for w in bits(s))
    return parts


@lru_cache(maxsize=1 << 17)
def _local_alpha_cover(adj: tuple[int, ...]) -> tuple[int, ...]:
    g = Graph(len(adj), adj)
    edges = g.edges()
    if not edges:
        return ()
    if g.n <= 3:
        return lcc_exact(g)[1].cliques

    x, y = edges[0]
    sub, labels = delete_vertices(g, _edge(x, y))
    cliques = _lift(_local_alpha_cover(sub.adj), labels)
    alpha = local_alphas(g)
    nx_, ny_ = g.adj[x] & ~(1 << y), g.adj[y] & ~(1 << x)
    n12 = nx_ & ny_
    n1, n2 = nx_ & ~n12, ny_ & ~n12
    rest = g.vertex_mask & ~_edge(x, y)

    # Step 1: closed-neighbourhood cliques of alpha-1 vertices grow by x and/or y.
    original = list(cliques)
    for u in bits(n1 | n2 | n12):
        if alpha[u] != 1 or not g.adj[u] & rest:
            continue
        holders = [i for i, c in enumerate(original) if c >> u & 1]
        if len(holders) != 1 or original[holders[0]] != g.closed_nbhd(u) & rest:
            raise ConstructionError(f"vertex {u} is not covered by exactly its closed neighbourhood")
        extra = (1 << x if (n1 | n12) >> u & 1 else 0) | (1 << y if (n2 | n12) >> u & 1 else 0)
        cliques[holders[0]] |= extra

    # Step 2: whole closed neighbourhoods of x / y when they are cliques.
    wanted = []
    if alpha[x] == 1:
        wanted.append(g.closed_nbhd(x))
    if alpha[y] == 1 and g.closed_nbhd(y) not in wanted:
        wanted.append(g.closed_nbhd(y))
    for c in wanted:
        if not any(c & ~d == 0 for d in cliques):
            cliques.append(c)

    covered = [0] * g.n
    for c in cliques:
        for w in bits(c):
            covered[w] |= c

    # Step 3: leftover edges at x, y, and at both, via matchings.
    n1p = mask_of(w for w in bits(n1) if not covered[x] >> w & 1)
    n2p = mask_of(w for w in bits(n2) if not covered[y] >> w & 1)
    n12p = mask_of(w for w in bits(n12) if not (covered[x] >> w & 1 and covered[y] >> w & 1))
    for s, ext in ((n1p, 1 << x), (n2p, 1 << y), (n12p, _edge(x, y))):
        cliques.extend(p | ext for p in _matching_parts(g, s))

    # Step 4
    if not covered[x] >> y & 1 and not n12p:
        cliques.append(_edge(x, y))
    return tuple(cliques)


def cover_local_alpha(g: Graph) -> CoverCertificate:
    """Cover with val(v) + n/alpha_G(v) <= n+1 at every non-isolated vertex (exact rationals)."""
    cover = CliqueCover(g.n, _local_alpha_cover(g.adj))
    check = validate_cover(g, cover)
    bounds = local_alpha_bounds(g)
    ok = check.valid and all(cover.valency[v] <= b for v, b in bounds.items())
    return CoverCertificate(emit_graph6(g), "local_alpha", cover, bounds, ok)


# claw-free ---------------------------------------------------------------------------


def find_split_pair(g: Graph) -> SplitPair:
    """First edge (u1, u2) whose removal leaves chromatic number >= chi(g) - 1."""
    if independence_number(g) != 2:
        raise PreconditionError("find_split_pair needs independence number 2")
    chi = chromatic_number(g)
    if chi <= max(clique_number(g), 2):
        raise PreconditionError("find_split_pair needs chi > max(omega, 2)")
    for u1, u2 in g.edges():
        rem = chromatic_number(delete_vertices(g, _edge(u1, u2))[0])
        if rem >= chi - 1:
            return SplitPair(u1, u2, rem)
    raise TheoremGapError(f"no adjacent split pair in {emit_graph6(g)}")


def _first_independent_triple(g: Graph) -> int:
    for a in range(g.n):
        for b in bits(g.vertex_mask & ~g.adj[a] & ~((2 << a) - 1)):
            c = g.vertex_mask & ~g.adj[a] & ~g.adj[b] & ~((2 << b) - 1)
            if c:
                return _edge(a, b) | (1 << lowest(c))
    raise ConstructionError("no independent triple although alpha >= 3")


@lru_cache(maxsize=1 << 17)
def _claw_free_cover(adj: tuple[int, ...]) -> tuple[int, ...]:
    g = Graph(len(adj), adj)
    if g.edge_count() == 0:
        return ()
    if g.n <= 4:
        return lcc_exact(g)[1].cliques
    alpha = independence_number(g)
    if alpha == 1:
        return (g.vertex_mask,)

    if alpha >= 3:
        t = _first_independent_triple(g)
        sub, labels = delete_vertices(g, t)
        inner = _lift(_claw_free_cover(sub.adj), labels)
        before = CliqueCover(g.n, tuple(inner)).valency
        cliques = list(inner)
        for u in bits(t):
            cliques.extend(p | (1 << u) for p in vertex_clique_partition(g, g.adj[u]))
        after = CliqueCover(g.n, tuple(cliques)).valency
        for w in bits(g.vertex_mask & ~t):
            gain = after[w] - before[w]
            if gain > (g.adj[w] & t).bit_count() or gain > 2:
                raise ConstructionError(f"vertex {w} gained {gain} cliques from the removed triple")
        return tuple(cliques)

    if chromatic_number(g) == clique_number(g):
        return tuple(_max_clique_cliques(g))

    pair = find_split_pair(g)
    u1, u2 = pair.u1, pair.u2
    sub, labels = delete_vertices(g, _edge(u1, u2))
    cliques = _lift(_claw_free_cover(sub.adj), labels)
    n1 = g.adj[u1] & ~g.closed_nbhd(u2)
    n2 = g.adj[u2] & ~g.closed_nbhd(u1)
    n12 = g.adj[u1] & g.adj[u2]
    for c in (n1 | (1 << u1), n2 | (1 << u2)):
        if not g.is_clique(c):
            raise ConstructionError("private neighbourhood of a split vertex is not a clique")
        if c.bit_count() > 1:
            cliques.append(c)
    if n12:
        cliques.extend(p | _edge(u1, u2) for p in vertex_clique_partition(g, n12))
    else:
        cliques.append(_edge(u1, u2))
    return tuple(cliques)


def cover_claw_free(g: Graph) -> CoverCertificate:
    """Cover with max valency <= n+1-chi(g) for claw-free graphs."""
    claw = find_claw(g)
    if claw is not None:
        centre, leaves = claw
        raise PreconditionError(f"graph has a claw: centre {centre}, leaves {leaves}")
    if g.n == 0:
        return _certify(g, "claw_free", [], 0)
    return _certify(g, "claw_free", list(_claw_free_cover(g.adj)), g.n + 1 - chromatic_number(g))


def cover_exact(g: Graph) -> CoverCertificate:
    k, cover = lcc_exact(g)
    return _certify(g, "exact", list(cover.cliques), k)


BUILDERS = {
    "alpha2": cover_alpha2,
    "max_clique": cover_max_clique,
    "local_alpha": cover_local_alpha,
    "claw_free": cover_claw_free,
    "exact": cover_exact,
}


def applies(method: str, g: Graph) -> str | None:
    """None if ``method`` can run on g, else the reason it is skipped."""
    if method == "alpha2" and (g.n < 2 or independence_number(g) != 2):
        return "independence number is not 2"
    if method == "claw_free" and find_claw(g) is not None:
        return "not claw-free"
    return None


def build(method: str, g: Graph) -> CoverCertificate:
    return BUILDERS[method.replace("-", "_")](g)

