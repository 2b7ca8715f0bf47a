"""Structural analysis of candidate squares S: support components,
four-cycle counting, row-sum diagnostics, and the battery of necessary
conditions a matrix must pass to be the square of an adjacency matrix.

Every check here is necessary-only: a failure proves S is not such a
square, a pass proves nothing (realization is the separate exact test).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import IntMatrix


def _require_symmetric(S: IntMatrix, what: str) -> None:
    if not S.is_symmetric():
        raise ValueError(f"{what} requires a symmetric matrix")


@dataclass(frozen=True)
class IndexPartition:
    """Partition of matrix indices into connected support components.

    Labels are 0..component_count-1, assigned in order of first
    appearance by index.
    """

    component_of: tuple[int, ...]
    component_count: int

    def components(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.component_count)]
        for i, c in enumerate(self.component_of):
            out[c].append(i)
        return out


def support_components(S: IntMatrix) -> IndexPartition:
    """Connected components of the support graph of S: indices i, j (i≠j)
    are joined whenever s_ij ≠ 0.  Diagonal entries are ignored.

    S is permutation-similar to a block-diagonal matrix with ≥2 zero
    off-blocks exactly when component_count ≥ 2.
    """
    _require_symmetric(S, "support_components")
    n = S.n
    rows = S.rows
    label = [-1] * n
    count = 0
    for start in range(n):
        if label[start] != -1:
            continue
        label[start] = count
        queue = deque([start])
        while queue:
            v = queue.popleft()
            rv = rows[v]
            for u in range(n):
                if u != v and rv[u] != 0 and label[u] == -1:
                    label[u] = count
                    queue.append(u)
        count += 1
    return IndexPartition(tuple(label), count)


def is_bipartite_or_disconnected(S: IntMatrix) -> bool:
    """For S = A(G)²: true iff G is bipartite or disconnected (block test).

    Meaningful only when S really is the square of an adjacency matrix;
    on arbitrary symmetric input it just reports whether the support
    graph splits.
    """
    return support_components(S).component_count >= 2


@dataclass(frozen=True)
class C4Count:
    """Result of the four-cycle count: pair_sum is Σ_{i≠j} C(s_ij, 2)
    over ordered pairs; the cycle count is pair_sum / 4, which is an
    integer whenever S is actually a square of an adjacency matrix."""

    pair_sum: int

    @property
    def divisible_by_four(self) -> bool:
        return self.pair_sum % 4 == 0

    @property
    def count(self) -> Fraction:
        return Fraction(self.pair_sum, 4)

    @property
    def cycles(self) -> int:
        """Integer count; only valid when divisible_by_four."""
        if not self.divisible_by_four:
            raise ValueError(f"pair sum {self.pair_sum} is not divisible by 4")
        return self.pair_sum // 4

    def __int__(self) -> int:
        return self.cycles


def count_c4(S: IntMatrix) -> C4Count:
    """Four-cycle count (1/4)·Σ_{i≠j} C(s_ij, 2) from a candidate square.

    For S = A(G)² this equals the number of distinct 4-cycles of G.  On
    arbitrary candidates the sum may fail to be divisible by four; the
    result keeps the exact rational and a divisibility flag so callers
    can use non-divisibility as a rejection.
    """
    _require_symmetric(S, "count_c4")
    n = S.n
    rows = S.rows
    total = 0
    for i in range(n):
        ri = rows[i]
        for j in range(n):
            if i != j:
                s = ri[j]
                total += s * (s - 1) // 2
    return C4Count(total)


def _size_and_sum_reachable(values: Sequence[int], k: int, target: int) -> bool:
    """Exact test: does some sub-multiset of `values` have exactly k
    elements summing to `target`?  Bitset DP over (count, sum)."""
    if k < 0 or target < 0 or k > len(values):
        return False
    mask = (1 << (target + 1)) - 1
    dp = [0] * (k + 1)
    dp[0] = 1
    for v in values:
        if v > target:
            continue
        for c in range(min(k, len(values)), 0, -1):
            dp[c] = (dp[c] | (dp[c - 1] << v)) & mask
    return bool((dp[k] >> target) & 1)


@dataclass(frozen=True)
class RowSummary:
    index: int
    row_sum: int
    diagonal: int
    avg_neighbor_degree: Fraction | None
    multiset_feasible: bool

    def to_json_dict(self) -> dict:
        avg = self.avg_neighbor_degree
        return {
            "index": self.index,
            "row_sum": self.row_sum,
            "diagonal": self.diagonal,
            "avg_neighbor_degree": None if avg is None else f"{avg.numerator}/{avg.denominator}",
            "multiset_feasible": self.multiset_feasible,
        }


@dataclass(frozen=True)
class RowSumReport:
    rows: tuple[RowSummary, ...]

    @property
    def all_feasible(self) -> bool:
        return all(r.multiset_feasible for r in self.rows)

    def infeasible_indices(self) -> list[int]:
        return [r.index for r in self.rows if not r.multiset_feasible]

    def to_json_dict(self) -> dict:
        return {
            "rows": [r.to_json_dict() for r in self.rows],
            "all_feasible": self.all_feasible,
        }

    def render_text(self) -> str:
        lines = ["row-sum diagnostics (labels are 1-indexed):"]
        for r in self.rows:
            avg = r.avg_neighbor_degree
            avg_s = "-" if avg is None else (str(avg.numerator) if avg.denominator == 1
                                             else f"{avg.numerator}/{avg.denominator}")
            flag = "ok" if r.multiset_feasible else "INFEASIBLE"
            lines.append(
                f"  v{r.index + 1}: row sum {r.row_sum}, diagonal {r.diagonal}, "
                f"avg neighbor degree {avg_s}, multiset {flag}"
            )
        return "\n".join(lines)


def _row_multiset_feasible(diag: Sequence[int], i: int, row_sum: int) -> bool:
    """Can s_ii values be picked from the other diagonal entries (one
    occurrence of s_ii removed: a vertex is not its own neighbor) so
    that they sum to the full row sum?"""
    others = [diag[j] for j in range(len(diag)) if j != i]
    return _size_and_sum_reachable(others, diag[i], row_sum)


def row_sum_report(S: IntMatrix) -> RowSumReport:
    """Per-index row sums, average neighbor degree (exact rational,
    absent when the diagonal is 0), and the neighbor-degree-multiset
    feasibility test."""
    _require_symmetric(S, "row_sum_report")
    n = S.n
    diag = S.diagonal()
    sums = S.row_sums()
    rows = []
    for i in range(n):
        d = diag[i]
        avg = Fraction(sums[i], d) if d > 0 else None
        rows.append(
            RowSummary(
                index=i,
                row_sum=sums[i],
                diagonal=d,
                avg_neighbor_degree=avg,
                multiset_feasible=_row_multiset_feasible(diag, i, sums[i]),
            )
        )
    return RowSumReport(tuple(rows))


@dataclass(frozen=True)
class RegularRowSumCheck:
    """Row-sum test for constant-diagonal matrices: every row of the
    square of a k-regular graph's adjacency matrix sums to k²."""

    passed: bool
    diagonal_constant: bool
    k: int | None
    note: str

    def __bool__(self) -> bool:
        return self.passed


def regular_row_sum_check(S: IntMatrix) -> RegularRowSumCheck:
    _require_symmetric(S, "regular_row_sum_check")
    diag = S.diagonal()
    if S.n == 0:
        return RegularRowSumCheck(True, True, None, "empty matrix")
    if len(set(diag)) != 1:
        return RegularRowSumCheck(True, False, None,
                                  "diagonal not constant: not the square of a regular graph")
    k = diag[0]
    bad = [i for i, s in enumerate(S.row_sums()) if s != k * k]
    if bad:
        return RegularRowSumCheck(
            False, True, k,
            f"rows {[i + 1 for i in bad]} (1-indexed) do not sum to k²={k * k}",
        )
    return RegularRowSumCheck(True, True, k, f"all rows sum to k²={k * k}")


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    reason: str


_CHECK_NAMES = (
    "symmetric",
    "nonneg_integer",
    "zero_free_diagonal_ok",
    "common_neighbor_bound",
    "trace_even",
    "c4_divisible_by_4",
    "rowsum_multiset_feasible",
)


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the full necessary-condition battery.

    overall = False proves S is not the square of any adjacency matrix;
    overall = True leaves realization open.
    """

    symmetric: CheckResult
    nonneg_integer: CheckResult
    zero_free_diagonal_ok: CheckResult
    common_neighbor_bound: CheckResult
    trace_even: CheckResult
    c4_divisible_by_4: CheckResult
    rowsum_multiset_feasible: CheckResult

    @property
    def overall(self) -> bool:
        return all(getattr(self, name).passed for name in _CHECK_NAMES)

    def checks(self) -> dict[str, CheckResult]:
        return {name: getattr(self, name) for name in _CHECK_NAMES}

    def failed_names(self) -> list[str]:
        return [name for name, c in self.checks().items() if not c.passed]

    def to_json_dict(self) -> dict:
        return {
            "checks": {
                name: {"passed": c.passed, "reason": c.reason}
                for name, c in self.checks().items()
            },
            "overall": self.overall,
        }

    def render_text(self) -> str:
        lines = ["necessary conditions:"]
        for name, c in self.checks().items():
            mark = "pass" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {name}: {c.reason}")
        lines.append(f"  overall: {'pass' if self.overall else 'FAIL (not a square of any adjacency matrix)'}")
        return "\n".join(lines)


def _coerce_matrix(S) -> tuple[int, tuple[tuple[int, ...], ...] | None, str | None]:
    """Accept an IntMatrix or raw nested sequences; return (n, rows, problem)."""
    if isinstance(S, IntMatrix):
        return S.n, S.rows, None
    try:
        rows = tuple(tuple(x for x in row) for row in S)
    except TypeError:
        return 0, None, f"input is not a matrix: {type(S).__name__}"
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            return n, None, f"row {i + 1} has length {len(row)}, expected {n}"
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool):
                return n, None, f"entry at row {i + 1}, column {j + 1} is not an integer"
    return n, rows, None


def necessary_conditions(S) -> ConditionReport:
    """Run the full rejection battery on S (an IntMatrix or raw nested
    integer sequences).  Never raises: malformed input shows up as
    failed checks."""
    n, rows, problem = _coerce_matrix(S)
    if rows is None:
        bad = CheckResult(False, f"not evaluated: {problem}")
        return ConditionReport(
            symmetric=CheckResult(False, problem or "malformed input"),
            nonneg_integer=bad,
            zero_free_diagonal_ok=bad,
            common_neighbor_bound=bad,
            trace_even=bad,
            c4_divisible_by_4=bad,
            rowsum_multiset_feasible=bad,
        )

    asym = next(
        ((i, j) for i in range(n) for j in range(i + 1, n) if rows[i][j] != rows[j][i]),
        None,
    )
    if asym is None:
        symmetric = CheckResult(True, "matrix is symmetric")
    else:
        i, j = asym
        symmetric = CheckResult(
            False, f"s_{i + 1},{j + 1}={rows[i][j]} differs from s_{j + 1},{i + 1}={rows[j][i]}"
        )

    neg = next(((i, j) for i in range(n) for j in range(n) if rows[i][j] < 0), None)
    if neg is None:
        nonneg = CheckResult(True, "all entries are nonnegative integers")
    else:
        i, j = neg
        nonneg = CheckResult(False, f"s_{i + 1},{j + 1}={rows[i][j]} is negative")

    structural_ok = symmetric.passed and nonneg.passed
    skipped = CheckResult(False, "not evaluated: requires a symmetric nonnegative matrix")
    if not structural_ok:
        return ConditionReport(
            symmetric=symmetric,
            nonneg_integer=nonneg,
            zero_free_diagonal_ok=skipped,
            common_neighbor_bound=skipped,
            trace_even=skipped,
            c4_divisible_by_4=skipped,
            rowsum_multiset_feasible=skipped,
        )

    diag = [rows[i][i] for i in range(n)]

    big = next((i for i in range(n) if diag[i] > n - 1), None)
    if big is None:
        diag_ok = CheckResult(True, f"every diagonal entry is at most n-1={max(n - 1, 0)}")
    else:
        diag_ok = CheckResult(
            False, f"s_{big + 1},{big + 1}={diag[big]} exceeds n-1={n - 1} (a degree cannot)"
        )

    viol = next(
        (
            (i, j)
            for i in range(n)
            for j in range(n)
            if i != j and rows[i][j] > min(diag[i], diag[j])
        ),
        None,
    )
    if viol is None:
        cn_bound = CheckResult(True, "every off-diagonal entry is at most min of its two diagonals")
    else:
        i, j = viol
        cn_bound = CheckResult(
            False,
            f"s_{i + 1},{j + 1}={rows[i][j]} exceeds min(s_{i + 1},{i + 1}, s_{j + 1},{j + 1})"
            f"={min(diag[i], diag[j])}: common neighbors are bounded by either degree",
        )

    tr = sum(diag)
    trace_even = (
        CheckResult(True, f"trace {tr} is even (twice the edge count)")
        if tr % 2 == 0
        else CheckResult(False, f"trace {tr} is odd, but it must equal twice the edge count")
    )

    pair_sum = 0
    for i in range(n):
        for j in range(n):
            if i != j:
                s = rows[i][j]
                pair_sum += s * (s - 1) // 2
    c4_ok = (
        CheckResult(True, f"Σ C(s_ij,2) = {pair_sum} is divisible by 4 ({pair_sum // 4} four-cycles)")
        if pair_sum % 4 == 0
        else CheckResult(False, f"Σ C(s_ij,2) = {pair_sum} is not divisible by 4")
    )

    infeasible = [
        i for i in range(n)
        if not _row_multiset_feasible(diag, i, sum(rows[i]))
    ]
    if not infeasible:
        multiset = CheckResult(True, "every row sum is reachable as a sum of other diagonal entries")
    else:
        labels = ", ".join(f"v{i + 1}" for i in infeasible)
        multiset = CheckResult(
            False,
            f"multiset check fails at {labels}: no sub-multiset of the other diagonal "
            f"entries with the diagonal's size sums to the row sum",
        )

    return ConditionReport(
        symmetric=symmetric,
        nonneg_integer=nonneg,
        zero_free_diagonal_ok=diag_ok,
        common_neighbor_bound=cn_bound,
        trace_even=trace_even,
        c4_divisible_by_4=c4_ok,
        rowsum_multiset_feasible=multiset,
    )
