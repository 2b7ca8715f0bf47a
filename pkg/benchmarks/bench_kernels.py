#!/usr/bin/env python3
"""Benchmark the compiled realization-search kernel against its
pure-Python twin on identical inputs.

Both kernels implement the same algorithm with the same deterministic
order, so node counts must agree exactly; this script asserts that while
timing them.  Run from the repository root:

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import itertools
import random
import time

from twowalk import IntMatrix, adjacency_matrix, graph_from_edges, necessary_conditions, square
from twowalk import _search_py

try:
    from twowalk import _search_c
except ImportError:
    _search_c = None


def all_squares(n: int) -> list[list[list[int]]]:
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        G = graph_from_edges(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])
        out.append((G.n, square(adjacency_matrix(G)).to_lists()))
    return out


def random_candidates(rng: random.Random, n: int, count: int) -> list[tuple[int, list[list[int]]]]:
    """Shaped symmetric candidates that pass the necessary conditions;
    a mix of realizable and exhaustion-forcing instances."""
    out = []
    while len(out) < count:
        diag = [rng.randrange(n) for _ in range(n)]
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = diag[i]
        for i in range(n):
            for j in range(i + 1, n):
                v = rng.randrange(min(diag[i], diag[j]) + 1)
                rows[i][j] = rows[j][i] = v
        if necessary_conditions(IntMatrix.from_rows(rows)).overall:
            out.append((n, rows))
    return out


def hard_perturbed_squares(wanted: set[int]) -> list[tuple[int, list[list[int]]]]:
    """Squares of random graphs with one off-diagonal pair swapped; the
    selected trial indices are known to force multi-million-node searches.
    Deterministic: fixed seed, instances identified by trial index."""
    rng = random.Random(99)
    picked = []
    for trial in range(max(wanted) + 1):
        n = rng.choice([10, 11, 12])
        pairs = list(itertools.combinations(range(n), 2))
        G = graph_from_edges(n, [e for e in pairs if rng.random() < 0.35])
        S = square(adjacency_matrix(G)).to_lists()
        i, j, k, l = rng.sample(range(n), 4)
        S[i][j], S[k][l] = S[k][l], S[i][j]
        S[j][i] = S[i][j]
        S[l][k] = S[k][l]
        if not necessary_conditions(IntMatrix.from_rows(S)).overall:
            continue
        if trial in wanted:
            picked.append((n, S))
    return picked


def run_workload(kernel, instances, witness_limit):
    start = time.perf_counter()
    results = []
    nodes = 0
    for n, rows in instances:
        status, witnesses, explored = kernel.run_search(n, rows, 10**9, 0.0, witness_limit)
        results.append((status, witnesses))
        nodes += explored
    return time.perf_counter() - start, results, nodes


def main():
    if _search_c is None:
        print("compiled kernel not built; nothing to compare")
        return

    rng = random.Random(1234)
    workloads = [
        ("all 1024 squares, n=5, first witness", all_squares(5), 1),
        ("enumerate all witnesses of S(C8) and S(C3+C3+C3)", [
            (8, square(adjacency_matrix(graph_from_edges(8, [(i, (i + 1) % 8) for i in range(8)]))).to_lists(),),
            (9, square(adjacency_matrix(graph_from_edges(9, [(0, 1), (1, 2), (0, 2),
                                                             (3, 4), (4, 5), (3, 5),
                                                             (6, 7), (7, 8), (6, 8)]))).to_lists(),),
        ], 0),
        ("200 shaped random candidates, n=8, first witness", random_candidates(rng, 8, 200), 1),
        ("2 hard perturbed squares, n=12 (millions of nodes)", hard_perturbed_squares({407, 1591}), 1),
    ]

    header = f"{'workload':<55} {'python':>9} {'compiled':>9} {'speedup':>8} {'nodes':>12}"
    print(header)
    print("-" * len(header))
    for title, instances, limit in workloads:
        t_py, res_py, nodes_py = run_workload(_search_py, instances, limit)
        t_c, res_c, nodes_c = run_workload(_search_c, instances, limit)
        assert res_py == res_c, f"kernel mismatch on workload: {title}"
        assert nodes_py == nodes_c, f"node-count mismatch on workload: {title}"
        print(f"{title:<55} {t_py:>8.3f}s {t_c:>8.3f}s {t_py / t_c:>7.1f}x {nodes_py:>12,}")


if __name__ == "__main__":
    main()
