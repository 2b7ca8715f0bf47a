"""Pure-Python backtracking kernel for the realization search.

Finds all symmetric 0/1 zero-diagonal matrices A with A·A == S, i.e.
all labeled graphs whose adjacency-matrix square equals S.

Algorithm
---------
Decision variables are the C(n,2) potential edges, ordered row by row:
(0,1),(0,2),…,(0,n-1),(1,2),…  Values are tried absent-first (0 then 1),
which makes the enumeration order and every outcome deterministic.

Incremental state per partial assignment: vertex degrees ``deg`` and
pairwise common-neighbor counts ``cn``.  Both only grow when edges are
added, so exceeding the target (deg[i] > s_ii, cn[i][j] > s_ij) prunes
soundly.  Additional pruning:

* after deciding pair (i,j): row i can still reach at most
  deg[i] + (n-1-j) neighbors and row j at most deg[j] + (n-i-2); either
  falling short of the required diagonal prunes;
* when row i completes (j = n-1): deg[i] must equal s_ii exactly, every
  now-final common-neighbor count cn[a][i] (a < i) must equal s_ai, and
  every later row r must still be able to reach s_rr.

Degrees-from-diagonal and common-neighbors-from-off-diagonal are exactly
the two-walk interpretation of the square, which is what makes this
propagation complete: a full assignment that survives all row-completion
checks necessarily satisfies A·A == S.

The compiled twin in ``_search_c.pyx`` implements the identical
algorithm (same decision order, same checks, same node accounting); the
two must return identical results, node counts included.

A "node" is one attempted (position, value) assignment, counted before
its feasibility checks run.
"""

from __future__ import annotations

import sys
import time

KERNEL_NAME = "python"

# status codes shared by both kernels
EXHAUSTED = 0
HIT_NODE_BUDGET = 1
HIT_TIME_BUDGET = 2
HIT_WITNESS_LIMIT = 3

_TIME_CHECK_MASK = 0x3FF  # consult the clock every 1024 nodes


def run_search(
    n: int,
    s: list[list[int]],
    max_nodes: int,
    time_limit: float,
    witness_limit: int,
) -> tuple[int, list[list[tuple[int, int]]], int]:
    """Enumerate graphs whose adjacency square equals ``s``.

    ``s`` must already be validated: symmetric, nonnegative, s_ii <= n-1
    and s_ij <= min(s_ii, s_jj).  ``max_nodes`` <= 0 means unlimited;
    ``time_limit`` <= 0 means no deadline; ``witness_limit`` <= 0 means
    enumerate everything.

    Returns (status, witnesses, nodes) where each witness is a sorted
    edge list.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    npairs = len(pairs)
    if sys.getrecursionlimit() < npairs + 100:
        sys.setrecursionlimit(npairs + 100)
    deadline = time.monotonic() + time_limit if time_limit > 0 else 0.0

    deg = [0] * n
    adj = [0] * n  # neighbor bitmasks
    cn = [[0] * n for _ in range(n)]
    witnesses: list[list[tuple[int, int]]] = []
    nodes = 0

    # n <= 1 has no vertex pairs: the all-zero matrix demanded by
    # validation admits exactly the empty graph
    if npairs == 0:
        if all(s[i][i] == 0 and sum(s[i]) == 0 for i in range(n)):
            witnesses.append([])
        return EXHAUSTED, witnesses, 0

    def place(pos: int) -> int:
        nonlocal nodes
        if pos == npairs:
            witnesses.append(sorted(
                (i, j) for i in range(n) for j in range(i + 1, n) if adj[i] >> j & 1
            ))
            if 0 < witness_limit <= len(witnesses):
                return HIT_WITNESS_LIMIT
            return EXHAUSTED
        i, j = pairs[pos]
        si = s[i]
        sj = s[j]
        for v in (0, 1):
            nodes += 1
            if 0 < max_nodes < nodes:
                return HIT_NODE_BUDGET
            if deadline and nodes & _TIME_CHECK_MASK == 0 and time.monotonic() > deadline:
                return HIT_TIME_BUDGET

            applied = False
            if v == 1:
                if deg[i] >= si[i] or deg[j] >= sj[j]:
                    continue
                # adding {i,j} makes i a new common neighbor of j with each
                # current neighbor of i, and symmetrically
                ok = True
                m = adj[i]
                while m:
                    b = m & -m
                    k = b.bit_length() - 1
                    m ^= b
                    if cn[j][k] >= sj[k]:
                        ok = False
                        break
                if ok:
                    m = adj[j]
                    while m:
                        b = m & -m
                        k = b.bit_length() - 1
                        m ^= b
                        if cn[i][k] >= si[k]:
                            ok = False
                            break
                if not ok:
                    continue
                m = adj[i]
                while m:
                    b = m & -m
                    k = b.bit_length() - 1
                    m ^= b
                    cn[j][k] += 1
                    cn[k][j] += 1
                m = adj[j]
                while m:
                    b = m & -m
                    k = b.bit_length() - 1
                    m ^= b
                    cn[i][k] += 1
                    cn[k][i] += 1
                deg[i] += 1
                deg[j] += 1
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                applied = True

            # remaining-capacity checks for the two rows just touched
            ok = deg[i] + (n - 1 - j) >= si[i] and deg[j] + (n - i - 2) >= sj[j]
            if ok and j == n - 1:
                # row i is complete: degree and all cn[.][i] are final
                ok = deg[i] == si[i]
                if ok:
                    cni = cn[i]
                    for a in range(i):
                        if cni[a] != si[a]:
                            ok = False
                            break
                if ok:
                    for r in range(i + 1, n):
                        if deg[r] + (n - i - 2) < s[r][r]:
                            ok = False
                            break

            if ok:
                res = place(pos + 1)
                if res != EXHAUSTED:
                    if applied:
                        _undo(i, j)
                    return res

            if applied:
                _undo(i, j)
        return EXHAUSTED

    def _undo(i: int, j: int) -> None:
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)
        deg[i] -= 1
        deg[j] -= 1
        m = adj[i]
        while m:
            b = m & -m
            k = b.bit_length() - 1
            m ^= b
            cn[j][k] -= 1
            cn[k][j] -= 1
        m = adj[j]
        while m:
            b = m & -m
            k = b.bit_length() - 1
            m ^= b
            cn[i][k] -= 1
            cn[k][i] -= 1

    status = place(0)
    return status, witnesses, nodes
