"""Generators for the explicit hypergraph families and the recursive
multipartite edge count g_value.

Conventions worth noting:
  * affine planes are built over prime fields only (arithmetic mod q);
    prime powers would need field tables and are rejected,
  * the n-gon rule is strict: a triple is an edge only when the center is
    strictly interior, so for even n a triple containing two antipodal
    vertices is a non-edge,
  * blow-up part sizes may be zero, which makes small members of the
    family expressible.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import PreconditionError
from .homsolve import max_clique
from .hypergraph import TwoColoring, UniformHypergraph
from .rng import SplitMix64


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def affine_plane(q: int, n_opt: int | None = None) -> UniformHypergraph:
    """Collinear triples of the affine plane of prime order q.

    Vertices are the points of GF(q)^2 in row-major order (x*q + y); with
    ``n_opt`` only the first n_opt points are kept.  Since two distinct
    lines share at most one point, every 4 vertices span 0, 1 or 4 edges.
    """
    if not _is_prime(q) or q < 3:
        raise PreconditionError(f"order must be a prime >= 3, got {q} "
                                "(prime powers are not supported)")
    n = q * q if n_opt is None else n_opt
    if not 3 <= n <= q * q:
        raise PreconditionError(f"point count must lie in 3..{q * q}, got {n}")

    lines: list[list[int]] = []
    for c in range(q):
        lines.append([c * q + y for y in range(q)])
    for slope in range(q):
        for b in range(q):
            lines.append([x * q + (slope * x + b) % q for x in range(q)])

    edges = []
    for line in lines:
        kept = sorted(p for p in line if p < n)
        edges.extend(combinations(kept, 3))
    return UniformHypergraph.from_edges(3, n, edges)


def ngon(n: int) -> UniformHypergraph:
    """Triples of a regular n-gon whose triangle strictly contains the
    center: all three circular gaps must be < n/2."""
    if n < 4:
        raise PreconditionError(f"n-gon needs n >= 4, got {n}")
    edges = []
    for a, b, c in combinations(range(n), 3):
        gaps = (b - a, c - b, n - c + a)
        if all(2 * g < n for g in gaps):
            edges.append((a, b, c))
    return UniformHypergraph.from_edges(3, n, edges)


_HPRIME_EDGES = [
    (0, 1, 2), (0, 1, 3), (2, 3, 4), (2, 3, 5), (0, 4, 5),
    (1, 4, 5), (0, 2, 4), (0, 3, 5), (1, 2, 5), (1, 3, 4),
]


def hprime() -> UniformHypergraph:
    """The 6-vertex 10-edge 3-graph whose blow-ups, together with the
    n-gon family, exhaust the graphs with every 4 vertices spanning 0 or 2
    edges."""
    return UniformHypergraph.from_edges(3, 6, _HPRIME_EDGES)


def blowup(base: UniformHypergraph, sizes: list[int]) -> UniformHypergraph:
    """Replace vertex i of the base by a coclique of sizes[i] vertices;
    a triple spanning three distinct parts is an edge iff the base triple
    is.  Vertices are grouped by part in base-vertex order."""
    if len(sizes) != base.n:
        raise PreconditionError(
            f"need one size per base vertex ({base.n}), got {len(sizes)}"
        )
    if any(s < 0 for s in sizes):
        raise PreconditionError("part sizes must be nonnegative")
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    n = offsets[-1]
    edges = []
    for a, b, c in base.iter_edges():
        for va in range(offsets[a], offsets[a + 1]):
            for vb in range(offsets[b], offsets[b + 1]):
                for vc in range(offsets[c], offsets[c + 1]):
                    edges.append((va, vb, vc))
    return UniformHypergraph.from_edges(3, n, edges)


def parity_triples(coloring: TwoColoring) -> UniformHypergraph:
    """Triples whose triangle has an odd number (one or three) of red
    edges under the coloring.  Every 4 vertices then span 0, 2 or 4
    edges."""
    if coloring.n < 3:
        raise PreconditionError(f"coloring needs n >= 3, got {coloring.n}")
    edges = []
    for a, b, c in combinations(range(coloring.n), 3):
        reds = coloring.is_red(a, b) + coloring.is_red(a, c) + coloring.is_red(b, c)
        if reds % 2 == 1:
            edges.append((a, b, c))
    return UniformHypergraph.from_edges(3, coloring.n, edges)


def mono_clique_numbers(coloring: TwoColoring) -> tuple[int, int]:
    """Exact sizes of the largest red and largest blue clique."""
    if coloring.n == 0:
        return 0, 0
    red = max_clique(coloring.red_graph()).size
    blue = max_clique(coloring.blue_graph()).size
    return red, blue


def random_coloring(n: int, seed: int) -> TwoColoring:
    """Each pair red with probability 1/2, drawn pair-by-pair in colex
    order from SplitMix64(seed) top bits.  Reproducible everywhere."""
    gen = SplitMix64(seed)
    red = 0
    for k in range(comb(n, 2)):
        red |= gen.next_bit() << k
    return TwoColoring(n, red)


def clique_plus_isolated(n: int) -> UniformHypergraph:
    """Complete 3-graph on vertices 0..n-2 plus the isolated vertex n-1."""
    if n < 2:
        raise PreconditionError(f"need n >= 2, got {n}")
    return UniformHypergraph.from_edges(3, n, combinations(range(n - 1), 3))


def balanced_parts(m: int, r: int) -> list[int]:
    """m split into r nearly equal parts, larger parts first."""
    q, s = divmod(m, r)
    return [q + 1] * s + [q] * (r - s)


def g_value(r: int, m: int) -> int:
    """Edge count of the recursive balanced complete r-partite r-graph:
    all transversal edges of an almost-equal r-partition, recursing within
    each part.  Zero when m < r."""
    if r < 2 or m < 0:
        raise PreconditionError(f"need r >= 2 and m >= 0, got r={r}, m={m}")
    if m < r:
        return 0
    parts = balanced_parts(m, r)
    total = 1
    for p in parts:
        total *= p
    return total + sum(g_value(r, p) for p in parts)
