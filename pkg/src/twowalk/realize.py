"""Exact decision procedure for "is S the square of an adjacency matrix?"

A candidate first goes through the necessary-condition battery; survivors
are handed to an exhaustive backtracking search over the C(n,2) potential
edges that either produces a witness graph (whose square is re-verified
entrywise before returning) or proves by exhaustion that none exists.

Two interchangeable kernels implement the search: a compiled Cython
extension and a pure-Python twin.  The compiled one is preferred at
import time; set ``TWOWALK_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from . import _search_py
from .analysis import necessary_conditions
from .core import Graph, IntMatrix, adjacency_matrix, graph_from_edges, square

if os.environ.get("TWOWALK_PURE_PYTHON") == "1":
    _kernel = _search_py
else:
    try:
        from . import _search_c as _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = _search_py

# the compiled kernel packs neighbor sets into machine words
_COMPILED_MAX_N = 64


def search_backend() -> str:
    """Name of the kernel selected at import: 'compiled' or 'python'."""
    return _kernel.KERNEL_NAME


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the exhaustive search; exceeding either aborts the run
    (reported as Aborted, never conflated with Infeasible)."""

    max_nodes: int = 100_000_000
    max_seconds: float | None = 60.0

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive or None")


class RealizationVerdict(Enum):
    REALIZED = "realized"
    INFEASIBLE = "infeasible"
    ABORTED = "aborted"


@dataclass(frozen=True)
class RealizationOutcome:
    verdict: RealizationVerdict
    witness: Graph | None
    nodes_explored: int
    elapsed: float
    reason: str | None

    def to_json_dict(self) -> dict:
        from .formats import graph_json_dict

        return {
            "verdict": self.verdict.value,
            "witness": None if self.witness is None else graph_json_dict(self.witness),
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "reason": self.reason,
        }


@dataclass(frozen=True)
class Enumeration:
    """Witness list from ``realize_all``; iterates like a list of graphs.

    ``complete`` is True when the search space was exhausted or the
    requested witness limit was reached; False means the budget aborted
    the enumeration early and the list may be missing witnesses.
    """

    witnesses: tuple[Graph, ...]
    complete: bool
    nodes_explored: int
    elapsed: float

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.witnesses)

    def __len__(self) -> int:
        return len(self.witnesses)

    def __getitem__(self, idx):
        return self.witnesses[idx]

    def to_json_dict(self) -> dict:
        from .formats import graph_json_dict

        return {
            "witnesses": [graph_json_dict(w) for w in self.witnesses],
            "complete": self.complete,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


def verify(G: Graph, S: IntMatrix) -> bool:
    """True iff the square of G's adjacency matrix equals S entrywise."""
    if G.n != S.n:
        raise ValueError(f"graph has {G.n} vertices but matrix is {S.n}x{S.n}")
    return square(adjacency_matrix(G)) == S


def _run_kernel(S: IntMatrix, budget: SearchBudget, witness_limit: int):
    kern = _kernel
    if kern.KERNEL_NAME == "compiled" and S.n > _COMPILED_MAX_N:
        kern = _search_py
    rows = S.to_lists()
    time_limit = budget.max_seconds if budget.max_seconds is not None else 0.0
    return kern.run_search(S.n, rows, budget.max_nodes, time_limit, witness_limit)


def realize(S: IntMatrix, budget: SearchBudget | None = None) -> RealizationOutcome:
    """Decide whether S is the square of some adjacency matrix.

    Deterministic given S and the budget: fixed variable order (edges row
    by row) and value order (edge absent before present).  A Realized
    outcome always carries a witness that has been re-verified against S.
    """
    budget = budget or SearchBudget()
    start = time.perf_counter()
    report = necessary_conditions(S)
    if not report.overall:
        failed = ", ".join(report.failed_names())
        return RealizationOutcome(
            RealizationVerdict.INFEASIBLE, None, 0, time.perf_counter() - start,
            f"failed necessary conditions: {failed}",
        )
    status, raw, nodes = _run_kernel(S, budget, witness_limit=1)
    elapsed = time.perf_counter() - start
    if raw:
        witness = graph_from_edges(S.n, raw[0])
        assert verify(witness, S), "search returned a non-witness; kernel bug"
        return RealizationOutcome(RealizationVerdict.REALIZED, witness, nodes, elapsed, None)
    if status == _search_py.EXHAUSTED:
        return RealizationOutcome(
            RealizationVerdict.INFEASIBLE, None, nodes, elapsed, "search exhausted"
        )
    which = "node" if status == _search_py.HIT_NODE_BUDGET else "time"
    return RealizationOutcome(
        RealizationVerdict.ABORTED, None, nodes, elapsed,
        f"search aborted: {which} budget exhausted",
    )


def realize_all(
    S: IntMatrix,
    limit: int | None = None,
    budget: SearchBudget | None = None,
) -> Enumeration:
    """Enumerate (up to ``limit``) every labeled graph whose adjacency
    square equals S, in the search's deterministic order.

    Witnesses are labeled graphs; callers wanting representatives up to
    isomorphism can post-filter with ``construct.are_isomorphic``.
    """
    budget = budget or SearchBudget()
    if limit is not None and limit <= 0:
        raise ValueError("limit must be positive or None")
    start = time.perf_counter()
    report = necessary_conditions(S)
    if not report.overall:
        return Enumeration((), True, 0, time.perf_counter() - start)
    status, raw, nodes = _run_kernel(S, budget, witness_limit=limit or 0)
    elapsed = time.perf_counter() - start
    witnesses = []
    for edges in raw:
        w = graph_from_edges(S.n, edges)
        assert verify(w, S), "search returned a non-witness; kernel bug"
        witnesses.append(w)
    complete = status in (_search_py.EXHAUSTED, _search_py.HIT_WITNESS_LIMIT)
    return Enumeration(tuple(witnesses), complete, nodes, elapsed)
