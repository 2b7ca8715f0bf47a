"""Exact graph / integer-matrix value types and the operations shared by
every other module.

All arithmetic is exact: matrix entries are Python ints (arbitrary
precision, so products can never silently wrap) and rationals are
`fractions.Fraction`.  Vertices are 0-indexed everywhere in the library;
1-indexed labels like ``v2`` appear only in rendered reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DimensionMismatch(ValueError):
    """Operands have incompatible sizes."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus a set of edges {i, j}.

    Edges are stored normalized (i < j); self-loops and out-of-range
    endpoints are rejected.  Instances are immutable and hashable.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < j < self.n):
                raise ValueError(f"edge ({i},{j}) out of range for n={self.n}")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> list[int]:
        out = [j if i == v else i for i, j in self.edges if v in (i, j)]
        out.sort()
        return out

    def adjacency_sets(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def graph_from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from (possibly unnormalized, duplicated) vertex pairs."""
    edges = set()
    for i, j in pairs:
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i},{j}) out of range for n={n}")
        edges.add((i, j) if i < j else (j, i))
    return Graph(n, frozenset(edges))


@dataclass(frozen=True)
class IntMatrix:
    """Dense square matrix of nonnegative integers, stored row-major as
    nested tuples.  Entries are plain Python ints, so arithmetic on them
    is exact at any magnitude."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for j, x in enumerate(row):
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"entry ({i},{j}) is not an integer: {x!r}")
                if x < 0:
                    raise ValueError(f"entry ({i},{j}) is negative: {x}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) if isinstance(x, bool) else x for x in row) for row in rows))

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.n))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def is_symmetric(self) -> bool:
        r = self.rows
        return all(r[i][j] == r[j][i] for i in range(self.n) for j in range(i + 1, self.n))

    def is_adjacency(self) -> bool:
        """Symmetric 0/1 with zero diagonal."""
        r = self.rows
        n = self.n
        if any(r[i][i] != 0 for i in range(n)):
            return False
        return all(
            r[i][j] in (0, 1) and r[i][j] == r[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()})"


@dataclass(frozen=True)
class Permutation:
    """Bijection on {0..n-1}: ``mapping[i]`` is the image of i."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError(f"not a permutation of 0..{len(self.mapping) - 1}: {self.mapping}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_iterable(cls, images: Iterable[int]) -> "Permutation":
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.mapping):
            inv[x] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """(self ∘ other)(i) = self(other(i))."""
        if self.n != other.n:
            raise DimensionMismatch(f"composing permutations of sizes {self.n} and {other.n}")
        return Permutation(tuple(self.mapping[other.mapping[i]] for i in range(self.n)))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.mapping))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its smallest element."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.mapping[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "id"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation({list(self.mapping)})"


def adjacency_matrix(G: Graph) -> IntMatrix:
    """Symmetric 0/1 matrix with zero diagonal; entry (i,j)=1 iff {i,j} is an edge."""
    rows = [[0] * G.n for _ in range(G.n)]
    for i, j in G.edges:
        rows[i][j] = 1
        rows[j][i] = 1
    return IntMatrix.from_rows(rows)


def square(M: IntMatrix) -> IntMatrix:
    """Exact matrix product M·M.

    For an adjacency matrix A(G), entry (i,j) of the square counts the
    walks of length two from vertex i to vertex j, and entry (i,i) is
    deg(i).
    """
    n = M.n
    rows = M.rows
    cols = list(zip(*rows)) if n else []
    out = []
    for i in range(n):
        ri = rows[i]
        out.append(tuple(sum(a * b for a, b in zip(ri, cols[j])) for j in range(n)))
    return IntMatrix(tuple(out))


def apply_similarity(M: IntMatrix, p: Permutation) -> IntMatrix:
    """Conjugate M by the permutation p: result[i][j] = M[p(i)][p(j)].

    This is P·M·Pᵀ for the permutation matrix P whose row i is the
    standard basis vector at p(i).  The convention satisfies
    ``apply_similarity(M, identity) == M`` and
    ``apply_similarity(apply_similarity(M, p), q) == apply_similarity(M, p.compose(q))``.
    """
    if M.n != p.n:
        raise DimensionMismatch(f"matrix of size {M.n} vs permutation of size {p.n}")
    m = p.mapping
    rows = M.rows
    return IntMatrix(tuple(tuple(rows[m[i]][m[j]] for j in range(M.n)) for i in range(M.n)))


def permute_graph(G: Graph, p: Permutation) -> Graph:
    """Relabel G consistently with apply_similarity:
    ``adjacency_matrix(permute_graph(G, p)) == apply_similarity(adjacency_matrix(G), p)``.

    Equivalently the result has an edge {i, j} iff G has {p(i), p(j)}.
    """
    if G.n != p.n:
        raise DimensionMismatch(f"graph of size {G.n} vs permutation of size {p.n}")
    inv = p.inverse().mapping
    return graph_from_edges(G.n, [(inv[i], inv[j]) for i, j in G.edges])


def degree_sequence(G: Graph) -> list[int]:
    """Vertex degrees sorted descending; sums to 2·|edges|."""
    deg = [0] * G.n
    for i, j in G.edges:
        deg[i] += 1
        deg[j] += 1
    deg.sort(reverse=True)
    return deg
