"""Core r-uniform hypergraph representation.

A hypergraph on n labeled vertices (0..n-1) stores its edge set as a bit
vector over colex-ranked r-subsets, packed into a single Python int.  The
colex rank of a sorted subset a1 < a2 < ... < ar is sum(C(aj, j)), which
makes rank/unrank O(r) and keeps the serialized edge order stable.

All values are immutable after construction; every operation returns a new
object, so concurrent use needs no locking.

Note on the degenerate range n < r: no r-subset exists, so every vertex
set is vacuously both a clique and a coclique and the homogeneous number
of such a hypergraph is taken to be n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import PreconditionError, UnsupportedUniformityError

VertexSet = tuple[int, ...]


def colex_rank(subset: Iterable[int]) -> int:
    """Rank of a strictly increasing subset in colexicographic order."""
    rank = 0
    size = 0
    prev = -1
    for j, a in enumerate(subset, start=1):
        if a <= prev:
            raise PreconditionError("subset must be strictly increasing")
        rank += comb(a, j)
        prev = a
        size = j
    if size == 0:
        raise PreconditionError("subset must be nonempty")
    return rank


def colex_unrank(rank: int, r: int) -> VertexSet:
    """Inverse of colex_rank for r-subsets."""
    out = [0] * r
    for j in range(r, 0, -1):
        # largest a with C(a, j) <= rank; a >= j-1 always works since C(j-1,j)=0
        a = j - 1
        while comb(a + 1, j) <= rank:
            a += 1
        out[j - 1] = a
        rank -= comb(a, j)
    return tuple(out)


def check_vertex_set(vertices: Iterable[int], n: int) -> VertexSet:
    """Validate a strictly increasing vertex set against a host of order n."""
    vs = tuple(vertices)
    prev = -1
    for v in vs:
        if v <= prev:
            raise PreconditionError(f"vertex set {vs} is not strictly increasing")
        prev = v
    if vs and (vs[0] < 0 or vs[-1] >= n):
        raise PreconditionError(f"vertex set {vs} out of range for n={n}")
    return vs


@dataclass(frozen=True)
class UniformHypergraph:
    """An r-uniform hypergraph on vertices 0..n-1.

    ``edges`` is a bit vector of length C(n, r): bit i is set iff the
    colex-rank-i r-subset is an edge.
    """

    r: int
    n: int
    edges: int

    def __post_init__(self):
        if self.r < 2:
            raise PreconditionError(f"uniformity must be >= 2, got {self.r}")
        if self.n < 0:
            raise PreconditionError(f"vertex count must be >= 0, got {self.n}")
        if self.edges < 0 or self.edges >> comb(self.n, self.r):
            raise PreconditionError("edge bit vector exceeds C(n, r) positions")

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, r: int, n: int) -> "UniformHypergraph":
        return cls(r, n, 0)

    @classmethod
    def complete(cls, r: int, n: int) -> "UniformHypergraph":
        return cls(r, n, (1 << comb(n, r)) - 1)

    @classmethod
    def from_edges(cls, r: int, n: int, edge_sets: Iterable[Iterable[int]]) -> "UniformHypergraph":
        bits = 0
        for e in edge_sets:
            vs = check_vertex_set(sorted(e), n)
            if len(vs) != r:
                raise PreconditionError(f"edge {vs} has arity {len(vs)}, expected {r}")
            bits |= 1 << colex_rank(vs)
        return cls(r, n, bits)

    # -- basic accessors ---------------------------------------------------

    @property
    def max_edges(self) -> int:
        return comb(self.n, self.r)

    @property
    def num_edges(self) -> int:
        return self.edges.bit_count()

    def has_edge(self, vertices: Iterable[int]) -> bool:
        vs = check_vertex_set(vertices, self.n)
        if len(vs) != self.r:
            raise PreconditionError(f"edge query {vs} has arity {len(vs)}, expected {self.r}")
        return (self.edges >> colex_rank(vs)) & 1 == 1

    def edge_list(self) -> list[VertexSet]:
        """All edges, ascending colex order."""
        out = []
        bits = self.edges
        while bits:
            low = bits & -bits
            out.append(colex_unrank(low.bit_length() - 1, self.r))
            bits ^= low
        return out

    def iter_edges(self) -> Iterator[VertexSet]:
        bits = self.edges
        while bits:
            low = bits & -bits
            yield colex_unrank(low.bit_length() - 1, self.r)
            bits ^= low

    def degree(self, v: int) -> int:
        """Number of edges containing v."""
        check_vertex_set((v,), self.n)
        others = [u for u in range(self.n) if u != v]
        return sum(
            1
            for rest in combinations(others, self.r - 1)
            if (self.edges >> colex_rank(sorted((v, *rest)))) & 1
        )

    # -- induced structure -------------------------------------------------

    def induced_count(self, vertices: Iterable[int]) -> int:
        """Number of edges spanned by the given vertex set."""
        vs = check_vertex_set(vertices, self.n)
        if len(vs) < self.r:
            raise PreconditionError(f"need at least {self.r} vertices, got {len(vs)}")
        return sum(
            1 for sub in combinations(vs, self.r) if (self.edges >> colex_rank(sub)) & 1
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> "UniformHypergraph":
        """Substructure on the given vertices, relabeled order-preservingly."""
        vs = check_vertex_set(vertices, self.n)
        bits = 0
        for pos in combinations(range(len(vs)), self.r):
            orig = tuple(vs[i] for i in pos)
            if (self.edges >> colex_rank(orig)) & 1:
                bits |= 1 << colex_rank(pos)
        return UniformHypergraph(self.r, len(vs), bits)

    def complement(self) -> "UniformHypergraph":
        """Bitwise negation of the edge vector over all C(n, r) positions."""
        full = (1 << comb(self.n, self.r)) - 1
        return UniformHypergraph(self.r, self.n, self.edges ^ full)

    def link(self, v: int) -> "UniformHypergraph":
        """Link graph of v: the (r-1)-graph on the remaining vertices whose
        edges are the (r-1)-sets completing v to an edge."""
        if self.r == 2:
            raise UnsupportedUniformityError("link of a 2-graph would have uniformity 1")
        check_vertex_set((v,), self.n)
        keep = [u for u in range(self.n) if u != v]
        bits = 0
        for pos in combinations(range(len(keep)), self.r - 1):
            orig = sorted((v, *(keep[i] for i in pos)))
            if (self.edges >> colex_rank(orig)) & 1:
                bits |= 1 << colex_rank(pos)
        return UniformHypergraph(self.r - 1, len(keep), bits)

    def restricted_link(self, u: int, vertices: Iterable[int]) -> "UniformHypergraph":
        """Link of u restricted to a vertex set S, as a 2-graph on |S|
        vertices: pair {v, w} is an edge iff {u, v, w} is an edge here."""
        if self.r != 3:
            raise UnsupportedUniformityError("restricted link is defined for 3-graphs")
        check_vertex_set((u,), self.n)
        vs = check_vertex_set(vertices, self.n)
        if u in vs:
            raise PreconditionError(f"pivot {u} must not lie in the restriction set")
        bits = 0
        for i, j in combinations(range(len(vs)), 2):
            if (self.edges >> colex_rank(sorted((u, vs[i], vs[j])))) & 1:
                bits |= 1 << colex_rank((i, j))
        return UniformHypergraph(2, len(vs), bits)

    def relabel(self, perm: Iterable[int]) -> "UniformHypergraph":
        """Apply a vertex permutation: vertex v moves to position perm[v]."""
        p = tuple(perm)
        if sorted(p) != list(range(self.n)):
            raise PreconditionError("not a permutation of the vertex range")
        bits = 0
        for e in self.iter_edges():
            bits |= 1 << colex_rank(sorted(p[v] for v in e))
        return UniformHypergraph(self.r, self.n, bits)


@dataclass(frozen=True)
class HomogeneousWitness:
    """A vertex set claimed to be a clique or coclique of some host."""

    kind: str  # "clique" or "coclique"
    vertices: VertexSet

    def __post_init__(self):
        if self.kind not in ("clique", "coclique"):
            raise PreconditionError(f"unknown witness kind {self.kind!r}")

    @property
    def size(self) -> int:
        return len(self.vertices)

    def validate(self, host: UniformHypergraph) -> bool:
        """Check every r-subset of the witness against the host."""
        vs = check_vertex_set(self.vertices, host.n)
        want = self.kind == "clique"
        return all(
            ((host.edges >> colex_rank(sub)) & 1 == 1) == want
            for sub in combinations(vs, host.r)
        )


@dataclass(frozen=True)
class TwoColoring:
    """A red/blue edge coloring of the complete graph on n vertices.

    ``red`` is a bit vector of length C(n, 2); a set bit means the
    colex-ranked pair is red, unset means blue.
    """

    n: int
    red: int

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError(f"vertex count must be >= 0, got {self.n}")
        if self.red < 0 or self.red >> comb(self.n, 2):
            raise PreconditionError("red bit vector exceeds C(n, 2) positions")

    def is_red(self, u: int, v: int) -> bool:
        return (self.red >> colex_rank(sorted((u, v)))) & 1 == 1

    @property
    def red_count(self) -> int:
        return self.red.bit_count()

    def red_graph(self) -> UniformHypergraph:
        return UniformHypergraph(2, self.n, self.red)

    def blue_graph(self) -> UniformHypergraph:
        return self.red_graph().complement()
