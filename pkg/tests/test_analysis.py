import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twowalk import (
    IntMatrix,
    Permutation,
    adjacency_matrix,
    apply_similarity,
    count_c4,
    disjoint_union,
    is_bipartite_or_disconnected,
    necessary_conditions,
    regular_row_sum_check,
    row_sum_report,
    square,
    support_components,
)
from conftest import (
    all_graphs,
    bipartite_or_disconnected_oracle,
    complete,
    cycle,
    four_cycle_count_oracle,
    neighbor_degree_sums_oracle,
    random_graph,
)

INFEASIBLE_4X4 = IntMatrix.from_rows([[2, 1, 1, 0], [1, 2, 1, 1], [1, 1, 1, 0], [0, 1, 0, 1]])


def sq(G):
    return square(adjacency_matrix(G))


class TestSupportComponents:
    def test_c6_splits_even_odd(self):
        parts = support_components(sq(cycle(6)))
        assert parts.component_count == 2
        assert parts.components() == [[0, 2, 4], [1, 3, 5]]

    def test_two_triangles_split(self):
        parts = support_components(sq(disjoint_union(cycle(3), cycle(3))))
        assert parts.component_count == 2
        assert sorted(len(c) for c in parts.components()) == [3, 3]

    def test_c5_connected(self):
        assert support_components(sq(cycle(5))).component_count == 1

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            support_components(IntMatrix.from_rows([[0, 1], [0, 0]]))

    def test_diagonal_ignored(self):
        # nonzero diagonal must not join indices
        parts = support_components(IntMatrix.from_rows([[5, 0], [0, 7]]))
        assert parts.component_count == 2


class TestBipartiteOrDisconnected:
    def test_examples(self):
        assert is_bipartite_or_disconnected(sq(cycle(6))) is True
        assert is_bipartite_or_disconnected(sq(cycle(5))) is False
        assert is_bipartite_or_disconnected(sq(complete(4))) is False

    @pytest.mark.parametrize("n", range(6))
    def test_block_split_exhaustive(self, n):
        for G in all_graphs(n):
            assert is_bipartite_or_disconnected(sq(G)) == bipartite_or_disconnected_oracle(G)

    def test_block_split_sampled_n7(self, rng):
        for _ in range(300):
            G = random_graph(rng, 7, rng.choice([0.2, 0.4, 0.6]))
            assert is_bipartite_or_disconnected(sq(G)) == bipartite_or_disconnected_oracle(G)


class TestCountC4:
    def test_examples(self):
        assert count_c4(sq(cycle(4))).cycles == 1
        assert count_c4(sq(complete(4))).cycles == 3
        assert count_c4(sq(cycle(3))).cycles == 0

    def test_non_divisible_keeps_rational(self):
        # three unordered pairs each contribute C(2,2)=1 twice: pair sum 6
        M = IntMatrix.from_rows([[0, 2, 2], [2, 0, 2], [2, 2, 0]])
        c4 = count_c4(M)
        assert not c4.divisible_by_four
        assert c4.pair_sum == 6
        assert c4.count == Fraction(3, 2)
        with pytest.raises(ValueError):
            _ = c4.cycles

    @pytest.mark.parametrize("n", range(6))
    def test_matches_enumeration_exhaustive(self, n):
        for G in all_graphs(n):
            assert count_c4(sq(G)).cycles == four_cycle_count_oracle(G)

    def test_matches_enumeration_sampled_n7(self, rng):
        for _ in range(200):
            G = random_graph(rng, 7)
            assert count_c4(sq(G)).cycles == four_cycle_count_oracle(G)

    def test_invariant_under_similarity(self, rng):
        for _ in range(50):
            G = random_graph(rng, 6)
            S = sq(G)
            p = Permutation(tuple(rng.sample(range(6), 6)))
            assert count_c4(apply_similarity(S, p)).pair_sum == count_c4(S).pair_sum


class TestRowSumReport:
    def test_c6_regular(self):
        report = row_sum_report(sq(cycle(6)))
        for r in report.rows:
            assert r.row_sum == 4
            assert r.avg_neighbor_degree == Fraction(2)
            assert r.multiset_feasible

    def test_infeasible_4x4_average_five_halves(self):
        report = row_sum_report(INFEASIBLE_4X4)
        v2 = report.rows[1]
        assert v2.row_sum == 5 and v2.diagonal == 2
        assert v2.avg_neighbor_degree == Fraction(5, 2)
        assert not v2.multiset_feasible
        assert not report.all_feasible

    def test_isolated_vertex_no_average(self):
        S = sq(disjoint_union(cycle(3), complete(1)))
        r = row_sum_report(S).rows[3]
        assert r.diagonal == 0 and r.row_sum == 0
        assert r.avg_neighbor_degree is None
        assert r.multiset_feasible

    def test_zero_diagonal_with_nonzero_row_is_infeasible(self):
        M = IntMatrix.from_rows([[0, 1, 1], [1, 1, 1], [1, 1, 1]])
        report = row_sum_report(M)
        # index 0 has s_ii=0 but a nonzero row: an isolated vertex has no two-walks
        assert not report.rows[0].multiset_feasible
        # index 1 has s_ii=1 and must find one other diagonal value equal to 3: impossible
        assert not report.rows[1].multiset_feasible

    def test_row_sums_match_neighbor_degree_oracle(self, rng):
        for n in range(6):
            for G in all_graphs(n):
                expected = neighbor_degree_sums_oracle(G)
                got = [r.row_sum for r in row_sum_report(sq(G)).rows]
                assert got == expected
        for _ in range(100):
            G = random_graph(rng, 7)
            assert [r.row_sum for r in row_sum_report(sq(G)).rows] == neighbor_degree_sums_oracle(G)

    def test_real_squares_always_feasible(self, rng):
        for _ in range(150):
            G = random_graph(rng, 7)
            assert row_sum_report(sq(G)).all_feasible

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            row_sum_report(IntMatrix.from_rows([[0, 1], [2, 0]]))


class TestRegularRowSum:
    def test_c6(self):
        check = regular_row_sum_check(sq(cycle(6)))
        assert check and check.diagonal_constant and check.k == 2

    def test_k4(self):
        S = sq(complete(4))
        assert S.diagonal() == (3, 3, 3, 3)
        check = regular_row_sum_check(S)
        assert check and check.k == 3  # rows sum to 9

    def test_constant_diagonal_bad_row_sum(self):
        M = IntMatrix.from_rows([[2, 1, 0], [1, 2, 1], [0, 1, 2]])
        check = regular_row_sum_check(M)
        assert not check and check.diagonal_constant

    def test_non_constant_diagonal_vacuous(self):
        M = IntMatrix.from_rows([[1, 0], [0, 2]])
        check = regular_row_sum_check(M)
        assert check and not check.diagonal_constant and check.k is None


class TestNecessaryConditions:
    def test_infeasible_4x4_rejected_by_multiset(self):
        report = necessary_conditions(INFEASIBLE_4X4)
        assert not report.overall
        assert report.failed_names() == ["rowsum_multiset_feasible"]
        assert "v2" in report.rowsum_multiset_feasible.reason

    @pytest.mark.parametrize("n", range(6))
    def test_real_squares_never_rejected(self, n):
        for G in all_graphs(n):
            report = necessary_conditions(sq(G))
            assert report.overall, (G, report.failed_names())

    def test_real_squares_never_rejected_n7_sample(self, rng):
        for _ in range(200):
            G = random_graph(rng, 7)
            assert necessary_conditions(sq(G)).overall

    def test_c4_divisibility_failure(self):
        M = IntMatrix.from_rows([[0, 2, 2], [2, 0, 2], [2, 2, 0]])
        report = necessary_conditions(M)
        assert not report.c4_divisible_by_4.passed

    def test_malformed_inputs_fail_without_raising(self):
        assert not necessary_conditions([[0, 1], [2, 0]]).symmetric.passed
        assert not necessary_conditions([[0, -1], [-1, 0]]).nonneg_integer.passed
        assert not necessary_conditions([[0, 1]]).overall
        assert not necessary_conditions("nope").overall
        assert not necessary_conditions([[0.5]]).overall

    def test_diagonal_bound(self):
        report = necessary_conditions([[3, 0], [0, 0]])
        assert not report.zero_free_diagonal_ok.passed

    def test_common_neighbor_bound(self):
        report = necessary_conditions([[1, 2], [2, 1]])
        assert not report.common_neighbor_bound.passed

    def test_odd_trace(self):
        report = necessary_conditions([[1, 0], [0, 0]])
        assert not report.trace_even.passed

    def test_json_shape(self):
        doc = necessary_conditions(INFEASIBLE_4X4).to_json_dict()
        assert set(doc) == {"checks", "overall"}
        assert set(doc["checks"]) == {
            "symmetric", "nonneg_integer", "zero_free_diagonal_ok",
            "common_neighbor_bound", "trace_even", "c4_divisible_by_4",
            "rowsum_multiset_feasible",
        }
        for entry in doc["checks"].values():
            assert set(entry) == {"passed", "reason"}

    @given(st.integers(2, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 6), min_size=n, max_size=n),
                           min_size=n, max_size=n)))
    @settings(max_examples=80, deadline=None)
    def test_never_raises_on_square_input(self, rows):
        necessary_conditions(rows)
