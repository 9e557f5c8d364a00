"""Exact homogeneous-set solvers for 2-graphs and 3-graphs.

The engine is a branch-and-bound over vertices in ascending index order.
It maintains the bitmask of candidates still compatible with the partial
solution (for uniformity 3, vertex w is compatible with partial set P when
every pair of P forms an edge, or non-edge, with w) and prunes with the
bound |P| + |candidates|.  Exact for n <= 64; a seeded greedy fallback
covers anything beyond.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import SizeLimitError, UnsupportedUniformityError
from .hypergraph import HomogeneousWitness, UniformHypergraph, colex_rank
from .rng import SplitMix64

MAX_EXACT_N = 64


@dataclass(frozen=True)
class SolveReport:
    size: int
    witness: HomogeneousWitness
    nodes_explored: int


def _pair_masks(h: UniformHypergraph, want_edges: bool) -> list[list[int]]:
    """pm[u][v] = bitmask of w such that {u, v, w} has the wanted status."""
    n = h.n
    pm = [[0] * n for _ in range(n)]
    full = (1 << h.max_edges) - 1
    bits = h.edges if want_edges else h.edges ^ full
    while bits:
        low = bits & -bits
        a, b, c = _unrank3(low.bit_length() - 1)
        pm[a][b] |= 1 << c
        pm[b][a] |= 1 << c
        pm[a][c] |= 1 << b
        pm[c][a] |= 1 << b
        pm[b][c] |= 1 << a
        pm[c][b] |= 1 << a
        bits ^= low
    return pm


def _unrank3(rank: int) -> tuple[int, int, int]:
    c = 2
    while (c + 1) * c * (c - 1) // 6 <= rank:
        c += 1
    rank -= c * (c - 1) * (c - 2) // 6
    b = 1
    while (b + 1) * b // 2 <= rank:
        b += 1
    a = rank - b * (b - 1) // 2
    return a, b, c


def _adjacency_masks(h: UniformHypergraph, want_edges: bool) -> list[int]:
    n = h.n
    adj = [0] * n
    full = (1 << h.max_edges) - 1
    bits = h.edges if want_edges else h.edges ^ full
    while bits:
        low = bits & -bits
        rank = low.bit_length() - 1
        b = 1
        while (b + 1) * b // 2 <= rank:
            b += 1
        a = rank - b * (b - 1) // 2
        adj[a] |= 1 << b
        adj[b] |= 1 << a
        bits ^= low
    return adj


def _solve(h: UniformHypergraph, want_edges: bool) -> tuple[int, list[int], int]:
    n = h.n
    if n > MAX_EXACT_N:
        raise SizeLimitError(f"exact solving is limited to n <= {MAX_EXACT_N}, got {n}")
    if h.r == 2:
        adj = _adjacency_masks(h, want_edges)
        pm = None
    elif h.r == 3:
        adj = None
        pm = _pair_masks(h, want_edges)
    else:
        raise UnsupportedUniformityError(
            f"exact solving supports uniformity 2 and 3, got {h.r}"
        )

    best_size = 0
    best: list[int] = []
    nodes = 0
    partial: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best_size, best, nodes
        while cand:
            if len(partial) + cand.bit_count() <= best_size:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            nodes += 1
            if adj is not None:
                nxt = cand & adj[v]
            else:
                nxt = cand
                row = pm[v]
                for t in partial:
                    nxt &= row[t]
            partial.append(v)
            if len(partial) > best_size:
                best_size = len(partial)
                best = partial.copy()
            if nxt:
                expand(nxt)
            partial.pop()

    expand((1 << n) - 1)
    return best_size, best, nodes


def max_clique(h: UniformHypergraph) -> SolveReport:
    """Largest vertex set all of whose r-subsets are edges.  Exact."""
    size, verts, nodes = _solve(h, want_edges=True)
    return SolveReport(size, HomogeneousWitness("clique", tuple(sorted(verts))), nodes)


def max_coclique(h: UniformHypergraph) -> SolveReport:
    """Largest vertex set none of whose r-subsets are edges.  Exact."""
    size, verts, nodes = _solve(h, want_edges=False)
    return SolveReport(size, HomogeneousWitness("coclique", tuple(sorted(verts))), nodes)


def homogeneous_number(h: UniformHypergraph) -> SolveReport:
    """Size of a largest homogeneous set; ties go to the clique side."""
    cl = max_clique(h)
    co = max_coclique(h)
    winner = cl if cl.size >= co.size else co
    return SolveReport(winner.size, winner.witness, cl.nodes_explored + co.nodes_explored)


def greedy_witness(
    h: UniformHypergraph, kind: str, order: list[int] | None = None
) -> HomogeneousWitness:
    """Greedy extension along ``order`` (default ascending).  Valid but not
    necessarily maximum."""
    want_edges = kind == "clique"
    if order is None:
        order = list(range(h.n))
    chosen: list[int] = []
    for v in order:
        ok = True
        for rest in combinations(chosen, h.r - 1):
            sub = sorted((v, *rest))
            if ((h.edges >> colex_rank(sub)) & 1 == 1) != want_edges:
                ok = False
                break
        if ok:
            chosen.append(v)
    return HomogeneousWitness(kind, tuple(sorted(chosen)))


def greedy_homogeneous(h: UniformHypergraph, seed: int) -> HomogeneousWitness:
    """Seeded greedy: shuffle the vertex order, grow a clique and a
    coclique, return the larger (clique on ties).  Deterministic per seed."""
    order = list(range(h.n))
    SplitMix64(seed).shuffle(order)
    cl = greedy_witness(h, "clique", order)
    co = greedy_witness(h, "coclique", order)
    return cl if cl.size >= co.size else co
