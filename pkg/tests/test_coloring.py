import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings

from signedgraphs.coloring import (
    BalancedColoring,
    BudgetExhausted,
    balanced_chromatic_number,
    check_coloring,
    chi_b,
    chi_b_oracle,
    chromatic_number,
    degeneracy_order,
    is_balanced_set,
    max_balanced_p_colorable_subgraph,
    max_balanced_set,
)
from signedgraphs.core import GraphError, SignedGraph, induced, negative_subgraph, relabel, switch, to_all_negative
from signedgraphs.kneser import reduced_schrijver
from signedgraphs.mycielski import all_negative_clique, negative_cycle_graph
from signedgraphs.verify import all_signed_graphs

from .strategies import graph_with_switching, signed_graphs

K5 = all_negative_clique(5)


class TestBalancedSets:
    def test_empty_set(self):
        assert is_balanced_set(K5, []).balanced

    def test_negative_k5_subsets(self):
        for r in range(6):
            for S in itertools.combinations(range(5), r):
                assert is_balanced_set(K5, S).balanced == (r <= 2)

    def test_digon(self, digon):
        res = is_balanced_set(digon, {0, 1})
        assert not res.balanced and res.cycle.validate(digon)

    def test_witness_uses_original_vertices(self):
        res = is_balanced_set(K5, {1, 3, 4})
        assert set(res.cycle.vertices) == {1, 3, 4} and res.cycle.validate(K5)

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            is_balanced_set(K5, {7})


class TestCheckColoring:
    def test_valid(self):
        assert check_coloring(K5, [1, 1, 2, 2, 3], 3)

    def test_unbalanced_class(self):
        assert not check_coloring(K5, [1, 1, 1, 2, 2], 3)

    def test_colour_above_palette(self):
        assert not check_coloring(K5, [1, 1, 2, 2, 3], 2)

    def test_dict_input(self, digon):
        assert check_coloring(digon, {0: 1, 1: 2}, 2)

    def test_partial(self, digon):
        with pytest.raises(GraphError):
            check_coloring(digon, {0: 1}, 2)

    def test_build_records_switchings(self, neg_triangle):
        c = BalancedColoring.build(neg_triangle, [1, 1, 2])
        assert c.p == 2 and c.used == 2 and c.classes() == [[0, 1], [2]]
        assert all(s is not None for s in c.switchings) and c.validate(neg_triangle)


class TestChiB:
    def test_negative_k5(self):
        r = balanced_chromatic_number(K5)
        assert r.value == 3 and r.complete and r.coloring.validate(K5)

    def test_reduced_schrijver_6_4(self):
        G = reduced_schrijver(6, 4)
        assert G.n == 15 and chi_b(G) == 3

    def test_balanced_graph(self, pos_triangle):
        assert chi_b(switch(pos_triangle, {1})) == 1

    def test_empty_graph(self):
        r = balanced_chromatic_number(SignedGraph(0))
        assert r.value == 0 and r.complete

    def test_isolated_vertices_do_not_count(self):
        assert chi_b(SignedGraph(4)) == 1

    def test_oracle_examples(self, neg_triangle, digon):
        assert chi_b_oracle(neg_triangle) == 2
        assert chi_b_oracle(digon) == 2

    def test_oracle_size_guard(self):
        with pytest.raises(GraphError):
            chi_b_oracle(SignedGraph(10))

    def test_budget_exhaustion_is_marked(self):
        r = balanced_chromatic_number(reduced_schrijver(6, 2), budget=10)
        assert not r.complete and r.value is None and r.lower <= 5 <= r.upper
        assert r.coloring.validate(reduced_schrijver(6, 2))
        with pytest.raises(BudgetExhausted):
            chi_b(reduced_schrijver(6, 2), budget=10)

    def test_exhaustive_agreement_with_oracle_n4(self):
        for n in range(5):
            for G in all_signed_graphs(n):
                assert chi_b(G) == chi_b_oracle(G)

    @settings(max_examples=60, deadline=None)
    @given(signed_graphs(min_n=5, max_n=7))
    def test_agreement_with_oracle(self, G):
        r = balanced_chromatic_number(G)
        assert r.value == chi_b_oracle(G)
        assert check_coloring(G, r.coloring.colors, r.value)

    @settings(max_examples=60, deadline=None)
    @given(graph_with_switching(max_n=8))
    def test_invariance(self, data):
        G, S, perm = data
        assert chi_b(G) == chi_b(relabel(switch(G, S), perm))

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(min_n=1, max_n=8))
    def test_vertex_deletion_changes_by_at_most_one(self, G):
        c = chi_b(G)
        for v in range(G.n):
            H, _ = induced(G, [x for x in range(G.n) if x != v])
            assert chi_b(H) <= c <= chi_b(H) + 1

    @settings(max_examples=60, deadline=None)
    @given(signed_graphs(max_n=8))
    def test_bounded_by_chromatic_number_of_negative_part(self, G):
        assert chi_b(G) <= chromatic_number(negative_subgraph(G))


class TestAllNegative:
    def test_identity_exhaustive_up_to_six_vertices(self):
        for H in nx.graph_atlas_g():
            if H.number_of_nodes() > 6:
                break
            assert chi_b(to_all_negative(H)) == math.ceil(chromatic_number(H) / 2)

    @pytest.mark.parametrize("m", range(1, 10))
    def test_cliques(self, m):
        assert chi_b(all_negative_clique(m)) == math.ceil(m / 2)


class TestMaxSubgraphs:
    def test_negative_k5(self):
        assert max_balanced_set(K5) == {0, 1}

    def test_balanced_graph(self, pos_triangle):
        assert max_balanced_set(pos_triangle) == {0, 1, 2}

    def test_negative_four_cycle(self):
        assert max_balanced_set(negative_cycle_graph(4)) == {0, 1, 2}

    def test_p2_on_negative_k5(self):
        S, col = max_balanced_p_colorable_subgraph(K5, 2)
        assert len(S) == 4 and set(col) == S
        assert check_coloring(induced(K5, sorted(S))[0], [col[v] for v in sorted(S)], 2)

    def test_p_at_least_chi_b(self):
        S, _ = max_balanced_p_colorable_subgraph(K5, 3)
        assert S == set(range(5))

    def test_p1_matches_max_balanced_set(self):
        S, col = max_balanced_p_colorable_subgraph(K5, 1)
        assert S == max_balanced_set(K5) and set(col.values()) == {1}

    def test_budget(self):
        with pytest.raises(BudgetExhausted):
            max_balanced_set(reduced_schrijver(6, 2), budget=5)

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(max_n=7))
    def test_maximum_by_brute_force(self, G):
        best = max(
            (S for r in range(G.n + 1) for S in itertools.combinations(range(G.n), r) if is_balanced_set(G, S).balanced),
            key=len,
        )
        got = max_balanced_set(G)
        assert len(got) == len(best) and is_balanced_set(G, got).balanced


class TestChromaticNumber:
    @pytest.mark.parametrize(
        "H, want",
        [(nx.complete_graph(5), 5), (nx.cycle_graph(5), 3), (nx.mycielski_graph(4), 4), (nx.empty_graph(3), 1), (nx.Graph(), 0)],
    )
    def test_examples(self, H, want):
        assert chromatic_number(H) == want


def test_degeneracy_order_is_permutation():
    G = reduced_schrijver(6, 4)
    assert sorted(degeneracy_order(G)) == list(range(G.n))
