import math

import networkx as nx
import pytest
from hypothesis import given, settings

from signedgraphs.core import (
    NEG,
    POS,
    GraphError,
    NegativeCycle,
    SignedGraph,
    ball,
    closed_walk_sign,
    distance,
    double_cover,
    induced,
    is_balanced,
    is_balanced_by_switching,
    negative_girth,
    negative_girth_by_cycles,
    negative_subgraph,
    new_graph,
    radius_in,
    reduce_closed_walk,
    relabel,
    switch,
    to_all_negative,
)
from signedgraphs.mycielski import all_negative_clique, negative_cycle_graph

from .strategies import graph_with_switching, signed_graphs


class TestConstruction:
    def test_positive_triangle(self, pos_triangle):
        assert pos_triangle.n == 3 and len(pos_triangle.edges) == 3

    def test_digon_accepted(self, digon):
        assert digon.pair_state(0, 1) == 3
        assert digon.neighbors(0) == ((1, POS), (1, NEG))

    def test_normalises_endpoint_order(self):
        G = new_graph(3, [(2, 0, "-"), (1, 0, "+")])
        assert G.sorted_edges() == [(0, 1, POS), (0, 2, NEG)]

    @pytest.mark.parametrize(
        "n, edges",
        [
            (2, [(0, 0, POS)]),
            (2, [(0, 2, POS)]),
            (2, [(0, 1, POS), (1, 0, POS)]),
            (2, [(0, 1, 0)]),
        ],
    )
    def test_rejects(self, n, edges):
        with pytest.raises(GraphError):
            SignedGraph(n, edges)

    def test_equality_ignores_labels(self, pos_triangle):
        assert pos_triangle.with_labels("abc") == pos_triangle


class TestSwitch:
    def test_single_vertex(self, neg_triangle):
        H = switch(neg_triangle, {0})
        assert H.sorted_edges() == [(0, 1, POS), (0, 2, POS), (1, 2, NEG)]

    def test_empty_and_full(self, neg_triangle):
        assert switch(neg_triangle, set()) == neg_triangle
        assert switch(neg_triangle, {0, 1, 2}) == neg_triangle

    def test_digon_stays_digon(self, digon):
        assert switch(digon, {0}) == digon

    def test_out_of_range(self, digon):
        with pytest.raises(GraphError):
            switch(digon, {5})


class TestBalance:
    def test_positive_triangle(self, pos_triangle):
        r = is_balanced(pos_triangle)
        assert r.balanced and r.switching == frozenset() and r.validate(pos_triangle)

    def test_negative_triangle(self, neg_triangle):
        r = is_balanced(neg_triangle)
        assert not r.balanced and r.cycle.length == 3 and r.validate(neg_triangle)

    def test_digon_witness_has_length_two(self, digon):
        r = is_balanced(digon)
        assert not r.balanced and r.cycle.length == 2

    def test_switched_balanced_graph(self):
        G = switch(SignedGraph(5, [(0, 1, POS), (1, 2, POS), (2, 3, POS), (3, 4, POS), (0, 4, POS)]), {1, 3})
        r = is_balanced(G)
        assert r.balanced and r.validate(G)

    @settings(max_examples=150, deadline=None)
    @given(signed_graphs(max_n=7))
    def test_agrees_with_switching_enumeration(self, G):
        r = is_balanced(G)
        assert r.balanced == is_balanced_by_switching(G)
        assert r.validate(G)


class TestWalks:
    def test_empty_walk(self, digon):
        assert closed_walk_sign(digon, []) == POS

    def test_digon_out_and_back(self, digon):
        assert closed_walk_sign(digon, [(0, 1, POS), (1, 0, NEG)]) == NEG

    def test_negative_triangle(self, neg_triangle):
        assert closed_walk_sign(neg_triangle, [(0, 1, NEG), (1, 2, NEG), (2, 0, NEG)]) == NEG

    def test_not_closed(self, neg_triangle):
        with pytest.raises(GraphError):
            closed_walk_sign(neg_triangle, [(0, 1, NEG), (1, 2, NEG)])

    def test_missing_edge(self, neg_triangle):
        with pytest.raises(GraphError):
            closed_walk_sign(neg_triangle, [(0, 1, POS), (1, 0, NEG)])

    def test_reduction_keeps_negative_part(self):
        # a positive detour 1-3-1 around a negative triangle
        steps = [(0, 1, NEG), (1, 3, POS), (3, 1, POS), (1, 2, NEG), (2, 0, NEG)]
        out = reduce_closed_walk(steps)
        assert [s[0] for s in out] == [0, 1, 2]


class TestDoubleCover:
    def test_positive_triangle_gives_two_triangles(self, pos_triangle):
        C, fiber = double_cover(pos_triangle)
        comps = list(nx.connected_components(C))
        assert len(comps) == 2 and all(len(c) == 3 for c in comps)
        assert set(fiber.values()) == {0, 1, 2}

    def test_negative_edge_is_matching(self):
        C, _ = double_cover(SignedGraph(2, [(0, 1, NEG)]))
        assert set(map(frozenset, C.edges)) == {
            frozenset({(0, POS), (1, NEG)}),
            frozenset({(0, NEG), (1, POS)}),
        }

    def test_digon_gives_four_cycle(self, digon):
        C, _ = double_cover(digon)
        assert C.number_of_edges() == 4 and nx.is_isomorphic(C, nx.cycle_graph(4))

    @settings(max_examples=80, deadline=None)
    @given(signed_graphs(max_n=7))
    def test_fibres_merge_iff_unbalanced(self, G):
        C, _ = double_cover(G)
        merged = any(nx.has_path(C, (v, POS), (v, NEG)) for v in range(G.n))
        assert merged == (not is_balanced(G).balanced)


class TestGirth:
    def test_digon(self, digon):
        assert negative_girth(digon).length == 2

    def test_negative_k5(self):
        g = negative_girth(all_negative_clique(5))
        assert g.length == 3 and g.witness.validate(all_negative_clique(5))

    def test_balanced_is_infinite(self, pos_triangle):
        g = negative_girth(pos_triangle)
        assert g.length == math.inf and not g.finite and str(g) == "inf"

    def test_long_cycle(self):
        assert negative_girth(negative_cycle_graph(25)).length == 25

    def test_witness_is_smallest_source_and_lexicographic(self):
        # two negative triangles; the one through vertex 0 wins
        G = SignedGraph(6, [(3, 4, NEG), (4, 5, NEG), (3, 5, NEG), (0, 2, NEG), (0, 1, POS), (1, 2, POS)])
        w = negative_girth(G).witness
        assert w.vertices == (0, 1, 2) and w.signs == (POS, POS, NEG)

    def test_deterministic_across_workers(self):
        # large enough to bypass the dense all-sources search
        G = SignedGraph(1600, [(i, i + 1, POS) for i in range(1599)] + [(0, 1599, NEG), (700, 702, NEG)])
        a = negative_girth(G, workers=1)
        b = negative_girth(G, workers=3)
        assert a == b and a.length == 3 and a.witness.vertices == (700, 701, 702)

    @settings(max_examples=150, deadline=None)
    @given(signed_graphs(max_n=8))
    def test_agrees_with_cycle_enumeration(self, G):
        g = negative_girth(G)
        assert g.length == negative_girth_by_cycles(G)
        if g.finite:
            assert g.witness.validate(G) and g.witness.length == g.length

    @settings(max_examples=100, deadline=None)
    @given(signed_graphs(max_n=8))
    def test_harary(self, G):
        assert is_balanced(G).balanced == (not negative_girth(G).finite)

    @settings(max_examples=100, deadline=None)
    @given(graph_with_switching(max_n=8))
    def test_switching_and_relabelling_invariance(self, data):
        G, S, perm = data
        H = relabel(switch(G, S), perm)
        assert negative_girth(G).length == negative_girth(H).length
        assert is_balanced(G).balanced == is_balanced(H).balanced

    @settings(max_examples=60, deadline=None)
    @given(graph_with_switching(max_n=7))
    def test_walk_sign_survives_switching(self, data):
        G, S, _ = data
        g = negative_girth(G)
        if g.finite:
            walk = g.witness.edge_walk()
            H = switch(G, S)
            flipped = [(u, v, -s if (u in S) != (v in S) else s) for u, v, s in walk]
            assert closed_walk_sign(H, flipped) == closed_walk_sign(G, walk) == NEG


class TestNegativeCycle:
    def test_rejects_repeated_vertex(self, neg_triangle):
        assert not NegativeCycle((0, 1, 0), (NEG, NEG, NEG)).validate(neg_triangle)

    def test_rejects_positive_cycle(self, pos_triangle):
        assert not NegativeCycle((0, 1, 2), (POS, POS, POS)).validate(pos_triangle)


class TestDistances:
    def test_self_distance(self, neg_triangle):
        assert distance(neg_triangle, 1, 1) == 0

    def test_unreachable(self):
        assert distance(SignedGraph(2), 0, 1) == math.inf

    def test_ball_on_path(self):
        P = SignedGraph(3, [(0, 1, POS), (1, 2, NEG)])
        assert ball(P, 1, 1) == {0, 1, 2}
        assert ball(P, 0, 1) == {0, 1}

    def test_radius_of_negative_25_cycle(self):
        assert radius_in(negative_cycle_graph(25), range(25)) == 12

    def test_radius_uses_ambient_distances(self):
        # 0 and 2 are far apart inside {0, 2} but close in the whole path
        P = SignedGraph(3, [(0, 1, POS), (1, 2, POS)])
        assert radius_in(P, {0, 2}) == 2

    def test_radius_of_empty_set(self, neg_triangle):
        with pytest.raises(GraphError):
            radius_in(neg_triangle, [])


class TestSubgraphs:
    def test_induced_digon_vertex(self, digon):
        H, verts = induced(digon, {0})
        assert H.n == 1 and not H.edges and verts == [0]

    def test_induced_keeps_digons(self, digon):
        H, _ = induced(SignedGraph(3, list(digon.edges) + [(1, 2, POS)]), {0, 1})
        assert H == digon

    def test_negative_subgraph_of_negative_k5(self):
        assert nx.is_isomorphic(negative_subgraph(all_negative_clique(5)), nx.complete_graph(5))

    def test_negative_subgraph_keeps_vertices(self, pos_triangle):
        N = negative_subgraph(pos_triangle)
        assert N.number_of_nodes() == 3 and N.number_of_edges() == 0

    def test_to_all_negative(self, neg_triangle):
        assert to_all_negative(nx.complete_graph(3)) == neg_triangle
