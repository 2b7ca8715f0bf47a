# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_search_py.run_search``.

Same decision order, same pruning, same node accounting; results are
required to be bit-identical with the pure kernel (the test suite
compares them, node counts included).  Limited to n <= 64; the
dispatcher falls back to the pure kernel above that.
"""

import time as _time

from libc.stdlib cimport calloc, free
from libc.string cimport memset

KERNEL_NAME = "compiled"

EXHAUSTED = 0
HIT_NODE_BUDGET = 1
HIT_TIME_BUDGET = 2
HIT_WITNESS_LIMIT = 3

MAX_N = 64


cdef struct Ctx:
    int n
    int npairs
    int* s            # n*n, row-major
    int* deg
    int* cn           # n*n
    unsigned char* adjm  # n*n 0/1
    long long nodes
    long long max_nodes
    double deadline   # 0.0 = none
    int witness_limit


cdef int _place(Ctx* c, int pos, int i, int j, list witnesses) except -1:
    """Decide pair (i, j) (position ``pos``) and recurse.

    Returns a status code; EXHAUSTED means the subtree was fully explored.
    """
    cdef int n = c.n
    cdef int v, k, a, r, ni, nj
    cdef int ok, applied, res
    cdef int* si
    cdef int* sj

    if pos == c.npairs:
        edges = []
        for a in range(n):
            for r in range(a + 1, n):
                if c.adjm[a * n + r]:
                    edges.append((a, r))
        witnesses.append(edges)
        if 0 < c.witness_limit <= len(witnesses):
            return HIT_WITNESS_LIMIT
        return EXHAUSTED

    # successor position
    if j == n - 1:
        ni = i + 1
        nj = i + 2
    else:
        ni = i
        nj = j + 1

    si = c.s + i * n
    sj = c.s + j * n

    for v in range(2):
        c.nodes += 1
        if 0 < c.max_nodes < c.nodes:
            return HIT_NODE_BUDGET
        if c.deadline != 0.0 and (c.nodes & 0x3FF) == 0:
            if _time.monotonic() > c.deadline:
                return HIT_TIME_BUDGET

        applied = 0
        if v == 1:
            if c.deg[i] >= si[i] or c.deg[j] >= sj[j]:
                continue
            ok = 1
            for k in range(n):
                if c.adjm[i * n + k] and c.cn[j * n + k] >= sj[k]:
                    ok = 0
                    break
            if ok:
                for k in range(n):
                    if c.adjm[j * n + k] and c.cn[i * n + k] >= si[k]:
                        ok = 0
                        break
            if not ok:
                continue
            for k in range(n):
                if c.adjm[i * n + k]:
                    c.cn[j * n + k] += 1
                    c.cn[k * n + j] += 1
            for k in range(n):
                if c.adjm[j * n + k]:
                    c.cn[i * n + k] += 1
                    c.cn[k * n + i] += 1
            c.deg[i] += 1
            c.deg[j] += 1
            c.adjm[i * n + j] = 1
            c.adjm[j * n + i] = 1
            applied = 1

        ok = 1
        if c.deg[i] + (n - 1 - j) < si[i] or c.deg[j] + (n - i - 2) < sj[j]:
            ok = 0
        if ok and j == n - 1:
            if c.deg[i] != si[i]:
                ok = 0
            if ok:
                for a in range(i):
                    if c.cn[i * n + a] != si[a]:
                        ok = 0
                        break
            if ok:
                for r in range(i + 1, n):
                    if c.deg[r] + (n - i - 2) < c.s[r * n + r]:
                        ok = 0
                        break

        if ok:
            res = _place(c, pos + 1, ni, nj, witnesses)
            if res != EXHAUSTED:
                if applied:
                    _undo(c, i, j)
                return res

        if applied:
            _undo(c, i, j)
    return EXHAUSTED


cdef void _undo(Ctx* c, int i, int j) noexcept:
    cdef int n = c.n
    cdef int k
    c.adjm[i * n + j] = 0
    c.adjm[j * n + i] = 0
    c.deg[i] -= 1
    c.deg[j] -= 1
    for k in range(n):
        if c.adjm[i * n + k]:
            c.cn[j * n + k] -= 1
            c.cn[k * n + j] -= 1
    for k in range(n):
        if c.adjm[j * n + k]:
            c.cn[i * n + k] -= 1
            c.cn[k * n + i] -= 1


def run_search(int n, s, long long max_nodes, double time_limit, int witness_limit):
    """Compiled counterpart of ``_search_py.run_search`` (same contract)."""
    if n > MAX_N:
        raise ValueError(f"compiled kernel supports n <= {MAX_N}, got {n}")

    cdef Ctx c
    cdef int i, j, status
    cdef list witnesses = []

    c.n = n
    c.npairs = n * (n - 1) // 2
    c.nodes = 0
    c.max_nodes = max_nodes
    c.deadline = _time.monotonic() + time_limit if time_limit > 0 else 0.0
    c.witness_limit = witness_limit

    if c.npairs == 0:
        ok_trivial = all(s[i][i] == 0 and sum(s[i]) == 0 for i in range(n))
        return (EXHAUSTED, [[]] if ok_trivial else [], 0)

    c.s = <int*> calloc(n * n, sizeof(int))
    c.deg = <int*> calloc(n, sizeof(int))
    c.cn = <int*> calloc(n * n, sizeof(int))
    c.adjm = <unsigned char*> calloc(n * n, sizeof(unsigned char))
    if not (c.s and c.deg and c.cn and c.adjm):
        free(c.s); free(c.deg); free(c.cn); free(c.adjm)
        raise MemoryError()

    try:
        for i in range(n):
            row = s[i]
            for j in range(n):
                c.s[i * n + j] = row[j]
        status = _place(&c, 0, 0, 1, witnesses)
        return (status, witnesses, int(c.nodes))
    finally:
        free(c.s)
        free(c.deg)
        free(c.cn)
        free(c.adjm)
