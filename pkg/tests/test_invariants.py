from math import ceil, sqrt

import networkx as nx
import pytest

import oracles
from cliquecover.graph import (
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edge_list,
    mask_of,
    path_graph,
    star_graph,
)
from cliquecover.invariants import (
    chromatic_number,
    clique_number,
    find_claw,
    independence_number,
    is_claw_free,
    local_alpha,
    local_alphas,
    local_independence_number,
    maximum_clique,
    maximum_independent_set,
    maximum_matching,
    optimal_colouring,
    vertex_clique_partition,
)
from conftest import labeled_graphs


def test_named_values():
    assert independence_number(complete_graph(5)) == 1
    assert independence_number(cycle_graph(5)) == 2
    assert independence_number(star_graph(3)) == 3
    assert clique_number(complete_graph(4)) == 4
    assert clique_number(cycle_graph(5)) == 2
    assert chromatic_number(cycle_graph(5)) == 3
    for n in range(1, 8):
        assert chromatic_number(complete_graph(n)) == n
    assert chromatic_number(empty_graph(0)) == 0
    assert independence_number(empty_graph(0)) == 0


def test_witnesses_are_valid(graphs_upto5):
    for g in graphs_upto5:
        s = maximum_independent_set(g)
        assert g.is_independent(s)
        assert g.is_clique(maximum_clique(g))
        col = optimal_colouring(g)
        assert all(col[u] != col[v] for u, v in g.edges())
        assert len(set(col)) == chromatic_number(g)


def test_against_brute_force(graphs_upto5):
    for g in graphs_upto5:
        assert independence_number(g) == oracles.alpha(g)
        assert clique_number(g) == oracles.omega(g)
        assert chromatic_number(g) == oracles.chi(g)


def test_structural_relations_n6(graphs6):
    for g in graphs6:
        a, w, c = independence_number(g), clique_number(g), chromatic_number(g)
        assert w == independence_number(complement(g))
        assert c >= max(w, ceil(g.n / a))
        # Nordhaus-Gaddum for the chromatic number
        s = c + chromatic_number(complement(g))
        assert 2 * sqrt(g.n) <= s <= g.n + 1


def test_chromatic_matches_networkx_bound_on_n6_sample(graphs6):
    for g in graphs6[::257]:
        h = nx.Graph(g.edges())
        h.add_nodes_from(range(g.n))
        greedy = max(nx.greedy_color(h).values(), default=-1) + 1
        assert chromatic_number(g) <= greedy


def test_local_alpha():
    assert local_alpha(star_graph(3), 0) == 3
    assert all(local_alpha(complete_graph(5), v) == 1 for v in range(5))
    assert all(local_alpha(cycle_graph(5), v) == 2 for v in range(5))
    assert local_alpha(empty_graph(3), 1) == 0
    with pytest.raises(ValueError):
        local_alpha(cycle_graph(5), 5)
    assert local_independence_number(star_graph(3)) == 3
    assert local_independence_number(cycle_graph(6)) == 2


def test_local_alpha_characterisation(graphs_upto5):
    for g in graphs_upto5:
        la = local_alphas(g)
        a = independence_number(g)
        for v in range(g.n):
            assert la[v] <= local_independence_number(g) <= a
            assert (la[v] == 0) == (g.degree(v) == 0)
            assert (la[v] == 1) == (g.degree(v) >= 1 and g.is_clique(g.closed_nbhd(v)))


def test_claw_examples():
    v, leaves = find_claw(star_graph(3))
    assert v == 0 and leaves == (1, 2, 3)
    assert is_claw_free(cycle_graph(7))
    lk4 = nx.convert_node_labels_to_integers(nx.line_graph(nx.complete_graph(4)))
    g = from_edge_list(6, lk4.edges())
    assert is_claw_free(g)
    # L(K_4) is the octahedron: its complement is a perfect matching
    assert complement(g).degrees() == [1] * 6


def test_claw_free_two_ways(graphs6):
    for g in graphs6:
        brute = not any(
            all(not g.has_edge(a, b) for a, b in [(x, y), (x, z), (y, z)])
            for v in range(g.n)
            for x in range(g.n) for y in range(x + 1, g.n) for z in range(y + 1, g.n)
            if all(g.has_edge(v, t) for t in (x, y, z))
        )
        assert is_claw_free(g) == brute == (max(local_alphas(g), default=0) <= 2)


def test_vertex_clique_partition_examples():
    assert len(vertex_clique_partition(complete_graph(4), 0b1111)) == 1
    assert len(vertex_clique_partition(cycle_graph(5), 0b11111)) == 3
    parts = vertex_clique_partition(star_graph(3), mask_of([1, 2, 3]))
    assert sorted(parts) == [0b10, 0b100, 0b1000]


def test_vertex_clique_partition_properties(graphs_upto5):
    for g in graphs_upto5:
        for s in range(1 << g.n):
            parts = vertex_clique_partition(g, s)
            union = 0
            for p in parts:
                assert p and not (p & union) and g.is_clique(p)
                union |= p
            assert union == s
            sub = from_edge_list(g.n, [(u, v) for u, v in g.edges() if s >> u & 1 and s >> v & 1])
            # complement of g[s] restricted to s, coloured by brute force
            comp_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                          if s >> u & 1 and s >> v & 1 and not sub.has_edge(u, v)]
            bits_s = [v for v in range(g.n) if s >> v & 1]
            relabel = {v: i for i, v in enumerate(bits_s)}
            h = from_edge_list(len(bits_s), [(relabel[u], relabel[v]) for u, v in comp_edges])
            assert len(parts) == oracles.chi(h)


def test_maximum_matching():
    assert len(maximum_matching(path_graph(4))) == 2
    m = maximum_matching(cycle_graph(5))
    assert len(m) == 2 and len({v for e in m for v in e}) == 4
    assert len(maximum_matching(complete_graph(4))) == 2


def test_maximum_matching_properties(graphs_upto5):
    for g in graphs_upto5:
        m = maximum_matching(g)
        used = [v for e in m for v in e]
        assert len(used) == len(set(used))
        assert all(g.has_edge(u, v) for u, v in m)
        assert len(m) == oracles.max_matching_size(g)
        unmatched = g.vertex_mask & ~mask_of(used)
        assert g.is_independent(unmatched)
        assert unmatched.bit_count() <= independence_number(g)
