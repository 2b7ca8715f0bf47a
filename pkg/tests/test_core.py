import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twowalk import (
    DimensionMismatch,
    Graph,
    IntMatrix,
    Permutation,
    adjacency_matrix,
    apply_similarity,
    degree_sequence,
    graph_from_edges,
    permute_graph,
    square,
)
from conftest import all_graphs, complete, cycle, empty, path, two_walk_count_oracle


class TestGraphFromEdges:
    def test_triangle(self):
        G = graph_from_edges(3, [(0, 1), (1, 2), (2, 0)])
        assert G.n == 3 and G.num_edges == 3

    def test_empty(self):
        G = graph_from_edges(4, [])
        assert G.n == 4 and G.num_edges == 0

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            graph_from_edges(2, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            graph_from_edges(3, [(0, 3)])

    def test_duplicates_and_orientation_collapse(self):
        G = graph_from_edges(3, [(1, 0), (0, 1), (0, 1)])
        assert G.sorted_edges() == [(0, 1)]


class TestAdjacencyMatrix:
    def test_triangle(self):
        assert adjacency_matrix(cycle(3)).to_lists() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]

    def test_empty_two(self):
        assert adjacency_matrix(empty(2)).to_lists() == [[0, 0], [0, 0]]

    def test_path(self):
        assert adjacency_matrix(path(3)).to_lists() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]

    def test_is_adjacency_tag(self):
        assert adjacency_matrix(cycle(4)).is_adjacency()
        assert not IntMatrix.from_rows([[1, 0], [0, 1]]).is_adjacency()


class TestSquare:
    def test_triangle(self):
        assert square(adjacency_matrix(cycle(3))).to_lists() == [[2, 1, 1], [1, 2, 1], [1, 1, 2]]

    def test_path_matches_oracle(self):
        G = path(3)
        assert square(adjacency_matrix(G)).to_lists() == two_walk_count_oracle(G)
        assert square(adjacency_matrix(G)).to_lists() == [[1, 0, 1], [0, 2, 0], [1, 0, 1]]

    def test_zero_matrix(self):
        assert square(IntMatrix.zeros(3)) == IntMatrix.zeros(3)

    def test_general_product_not_just_symmetric(self):
        M = IntMatrix.from_rows([[1, 2], [0, 1]])
        assert square(M).to_lists() == [[1, 4], [0, 1]]

    @pytest.mark.parametrize("n", range(6))
    def test_two_walk_oracle_exhaustive(self, n):
        # n=6 is covered by the acceptance suite
        for G in all_graphs(n):
            assert square(adjacency_matrix(G)).to_lists() == two_walk_count_oracle(G)

    def test_trace_is_twice_edge_count(self):
        for n in range(6):
            for G in all_graphs(n):
                assert square(adjacency_matrix(G)).trace() == 2 * G.num_edges

    @given(st.lists(st.lists(st.integers(0, 9), min_size=5, max_size=5), min_size=5, max_size=5))
    @settings(max_examples=60, deadline=None)
    def test_symmetric_input_gives_symmetric_square(self, rows):
        sym = [[rows[min(i, j)][max(i, j)] for j in range(5)] for i in range(5)]
        M = IntMatrix.from_rows(sym)
        assert M.is_symmetric()
        assert square(M).is_symmetric()


class TestIntMatrix:
    def test_rejects_ragged(self):
        with pytest.raises(ValueError, match="length"):
            IntMatrix.from_rows([[0, 1], [1]])

    def test_rejects_negative(self):
        with pytest.raises(ValueError, match="negative"):
            IntMatrix.from_rows([[0, -1], [-1, 0]])

    def test_rejects_non_integer(self):
        with pytest.raises(ValueError, match="not an integer"):
            IntMatrix.from_rows([[0.5]])

    def test_symmetry_probe(self):
        assert IntMatrix.from_rows([[0, 2], [2, 0]]).is_symmetric()
        assert not IntMatrix.from_rows([[0, 2], [1, 0]]).is_symmetric()


class TestPermutation:
    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))

    def test_inverse_composes_to_identity(self):
        p = Permutation((2, 0, 1, 3))
        assert p.compose(p.inverse()).is_identity()
        assert p.inverse().compose(p).is_identity()

    def test_cycle_string(self):
        assert Permutation((1, 0, 2)).cycle_string() == "(0 1)"
        assert Permutation.identity(3).cycle_string() == "id"


class TestApplySimilarity:
    def test_identity_law(self):
        M = square(adjacency_matrix(cycle(5)))
        assert apply_similarity(M, Permutation.identity(5)) == M

    def test_path_swap_automorphism(self):
        M = adjacency_matrix(path(3))
        assert apply_similarity(M, Permutation((2, 1, 0))) == M

    def test_diagonal_cyclic_shift(self):
        M = IntMatrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
        p = Permutation((1, 2, 0))
        # entry (i,i) of the result is M[p(i)][p(i)]
        assert apply_similarity(M, p).diagonal() == (2, 3, 1)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            apply_similarity(IntMatrix.zeros(3), Permutation.identity(2))

    @given(st.permutations(list(range(8))), st.permutations(list(range(8))))
    @settings(max_examples=60, deadline=None)
    def test_group_action_laws(self, pa, qa):
        M = square(adjacency_matrix(graph_from_edges(
            8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4), (5, 6), (6, 7), (0, 7)])))
        p = Permutation(tuple(pa))
        q = Permutation(tuple(qa))
        lhs = apply_similarity(apply_similarity(M, p), q)
        rhs = apply_similarity(M, p.compose(q))
        assert lhs == rhs
        assert apply_similarity(M, Permutation.identity(8)) == M

    def test_graph_relabel_consistency(self):
        G = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        p = Permutation((4, 2, 0, 1, 3))
        assert adjacency_matrix(permute_graph(G, p)) == apply_similarity(adjacency_matrix(G), p)


class TestDegreeSequence:
    def test_examples(self):
        assert degree_sequence(cycle(3)) == [2, 2, 2]
        star = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert degree_sequence(star) == [3, 1, 1, 1]
        assert degree_sequence(empty(4)) == [0, 0, 0, 0]

    def test_sum_is_twice_edges(self):
        for G in all_graphs(5):
            assert sum(degree_sequence(G)) == 2 * G.num_edges

    def test_complete_graph(self):
        assert degree_sequence(complete(5)) == [4] * 5
