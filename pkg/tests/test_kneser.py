import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signedgraphs.coloring import chi_b
from signedgraphs.core import GraphError, induced, is_balanced, negative_girth, negative_girth_by_cycles, relabel, switch
from signedgraphs.kneser import (
    SignedSubset,
    alternating_subsets,
    antitwin_pairs,
    is_alternating,
    kneser_girth_formula,
    kneser_signed,
    label_index,
    locate_cycle,
    lower_bound_k,
    lower_bound_witness,
    parse_subset,
    reduce_double_switching,
    reduced_kneser,
    reduced_schrijver,
    schrijver_signed,
    shift_cycle_witness,
    signed_subsets,
)
from signedgraphs.mycielski import all_negative_clique


class TestSubsets:
    def test_order_n2_k1(self):
        assert [str(s) for s in signed_subsets(2, 1)] == ["1", "-1", "2", "-2"]

    @pytest.mark.parametrize("n, k", [(6, 4), (3, 3), (5, 0), (7, 2)])
    def test_counts(self, n, k):
        assert len(signed_subsets(n, k)) == math.comb(n, k) * 2**k

    def test_sorted_by_absolute_value(self):
        assert SignedSubset.of(5, 3, -1, 2).elements == (-1, 2, 3)
        assert str(parse_subset(5, "3,-1,2")) == "-1,2,3"

    @pytest.mark.parametrize("els", [(1, -1), (0,), (6,)])
    def test_invalid(self, els):
        with pytest.raises(GraphError):
            SignedSubset(5, els)

    def test_k_above_n(self):
        with pytest.raises(GraphError):
            signed_subsets(2, 3)

    def test_alternation(self):
        assert is_alternating(SignedSubset.of(4, 1, -2, 3, -4))
        assert not is_alternating(SignedSubset.of(4, 1, 2))
        assert all(is_alternating(SignedSubset.of(4, x)) for x in (1, -3))

    def test_cyclic_alternation(self):
        assert not is_alternating(SignedSubset.of(5, 1, -2, 3), "cyclic")
        assert is_alternating(SignedSubset.of(5, 1, -2, 3, -5), "cyclic")
        assert alternating_subsets(5, 3, "cyclic") == []

    @pytest.mark.parametrize("n, k", [(6, 4), (5, 2), (7, 3), (4, 4)])
    def test_alternating_count(self, n, k):
        subs = alternating_subsets(n, k)
        assert len(subs) == 2 * math.comb(n, k)
        assert subs == [s for s in signed_subsets(n, k) if is_alternating(s)]


class TestGenerators:
    @given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
    def test_edge_rule(self, nk):
        n, k = nk
        G = kneser_signed(n, k)
        for i, A in enumerate(G.labels):
            a = set(A.elements)
            for j in range(i + 1, G.n):
                b = set(G.labels[j].elements)
                assert G.has_edge(i, j, 1) == (not a & {-x for x in b})
                assert G.has_edge(i, j, -1) == (not a & b)

    def test_kneser_6_4_girth(self):
        assert negative_girth(kneser_signed(6, 4)).length == 3

    @pytest.mark.xfail(strict=True, reason="alternating subsets of [6] give a negative triangle")
    @pytest.mark.parametrize("alternation", ["linear", "cyclic"])
    def test_schrijver_6_4_girth_four(self, alternation):
        assert negative_girth(schrijver_signed(6, 4, alternation=alternation)).length == 4

    def test_schrijver_6_4_triangle(self):
        G = schrijver_signed(6, 4)
        idx = label_index(G)
        tri = [SignedSubset.of(6, 1, -2, 3, -4), SignedSubset.of(6, 1, -4, 5, -6), SignedSubset.of(6, 2, -3, 5, -6)]
        u, v, w = (idx[A] for A in tri)
        assert G.pair_state(u, v) == G.pair_state(v, w) == 1 and G.pair_state(u, w) == 2
        assert negative_girth_by_cycles(G) == negative_girth(G).length == 3

    @pytest.mark.parametrize("k", range(1, 7))
    def test_kneser_k_k_balanced(self, k):
        assert is_balanced(kneser_signed(k, k)).balanced

    @pytest.mark.parametrize("n, k", [(4, 2), (6, 3), (7, 2)])
    def test_digons_when_n_at_least_2k(self, n, k):
        G = kneser_signed(n, k)
        assert any(G.pair_state(u, v) == 3 for u, v, _ in G.edges)

    def test_size_guard(self):
        with pytest.raises(GraphError):
            kneser_signed(10, 5, max_vertices=1000)

    def test_schrijver_is_induced(self):
        K, S = kneser_signed(5, 3), schrijver_signed(5, 3)
        idx = label_index(K)
        for u, v, s in S.edges:
            assert K.has_edge(idx[S.labels[u]], idx[S.labels[v]], s)

    def test_label_index_without_labels(self):
        with pytest.raises(GraphError):
            label_index(all_negative_clique(3))


class TestAntitwins:
    @pytest.mark.parametrize("n, k", [(3, 1), (4, 2), (5, 2), (6, 4), (6, 3)])
    def test_antitwin_is_negation(self, n, k):
        G = kneser_signed(n, k)
        idx = label_index(G)
        pairs = set(antitwin_pairs(G))
        want = {tuple(sorted((i, idx[-A]))) for i, A in enumerate(G.labels)}
        assert pairs == want

    def test_reduced_sizes(self):
        assert reduced_kneser(6, 4).n == 120
        assert reduced_schrijver(6, 4).n == 15

    def test_representative_has_positive_first_element(self):
        assert all(A.elements[0] > 0 for A in reduced_schrijver(6, 3).labels)

    def test_reduce_rejects_non_double_switching(self):
        with pytest.raises(GraphError):
            reduce_double_switching(all_negative_clique(4))

    def test_generic_graph_reduction(self):
        # two copies of a negative triangle glued as antitwins
        G = kneser_signed(3, 1)
        H = reduce_double_switching(G.with_labels(None))
        assert H.n == 3

    @pytest.mark.parametrize("n, k", [(5, 2), (6, 4), (5, 3)])
    def test_switching_a_vertex_is_swapping_with_its_antitwin(self, n, k):
        K = kneser_signed(n, k)
        idx = label_index(K)
        R = reduce_double_switching(K)
        for v in range(0, R.n, 7):
            labs = list(R.labels)
            labs[v] = -labs[v]
            swapped, _ = induced(K, [idx[A] for A in labs])
            # induced() keeps vertices in index order; put them back in R's order
            order = sorted(range(R.n), key=lambda i: idx[labs[i]])
            back = [0] * R.n
            for pos, i in enumerate(order):
                back[pos] = i
            assert relabel(swapped, back) == switch(R, {v})

    def test_vertex_deletion_can_drop_chi_b(self):
        R = reduced_schrijver(5, 2)
        assert chi_b(R) == 4
        H = reduce_double_switching(schrijver_signed(5, 2))
        assert chi_b(induced(H, range(1, H.n))[0]) == 3


class TestGirthFormula:
    @pytest.mark.parametrize("n, k, g", [(6, 4, 3), (5, 4, 5), (8, 4, 2), (4, 4, math.inf)])
    def test_examples(self, n, k, g):
        assert kneser_girth_formula(n, k) == g

    def test_range(self):
        with pytest.raises(GraphError):
            kneser_girth_formula(3, 4)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_graph(self, n):
        for k in range(1, n + 1):
            assert negative_girth(kneser_signed(n, k)).length == kneser_girth_formula(n, k)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_schrijver_at_least_kneser(self, n):
        for k in range(1, n + 1):
            assert negative_girth(schrijver_signed(n, k)).length >= kneser_girth_formula(n, k)


class TestShiftWitness:
    def test_five_four(self):
        W = shift_cycle_witness(5, 4)
        assert [str(A) for A in W.vertices] == ["1,2,3,4", "2,3,4,5", "-1,3,4,5", "-1,-2,4,5", "-1,-2,-3,5"]
        assert W.signs == (1, 1, 1, 1, -1)

    def test_digon_case(self):
        W = shift_cycle_witness(8, 4)
        assert W.length == 2 and locate_cycle(W, kneser_signed(8, 4)).validate(kneser_signed(8, 4))

    @pytest.mark.parametrize("n, k", [(n, k) for n in range(3, 8) for k in range(1, n) if n < 2 * k])
    def test_validates(self, n, k):
        G = kneser_signed(n, k)
        W = shift_cycle_witness(n, k)
        assert W.length == kneser_girth_formula(n, k)
        assert locate_cycle(W, G).validate(G)

    def test_range(self):
        with pytest.raises(GraphError):
            shift_cycle_witness(4, 4)

    def test_locate_unknown_label(self):
        with pytest.raises(GraphError):
            locate_cycle(shift_cycle_witness(5, 4), schrijver_signed(5, 4))


class TestLowerBound:
    def test_p2_n5(self):
        w = lower_bound_witness(2, 5)
        assert w.k == 4 and w.graph.n == 5 and w.core_vertices == 5
        assert negative_girth(w.graph).length >= 5 and w.girth_lower == 5

    def test_p3_n15(self):
        w = lower_bound_witness(3, 15)
        assert (w.k, w.graph.n, w.core_vertices, w.root_over_e) == (4, 15, 15, 2)
        assert chi_b(w.graph) == 3

    def test_p3_n9_maximality(self):
        k = lower_bound_k(3, 9)
        assert math.comb(3 + k - 1, k) <= 9 < math.comb(3 + k, k + 1)
        w = lower_bound_witness(3, 9)
        assert w.graph.n == 9 and w.core_vertices == math.comb(2 + k, k)

    def test_range(self):
        with pytest.raises(GraphError):
            lower_bound_witness(1, 5)
        with pytest.raises(GraphError):
            lower_bound_witness(3, 2)
