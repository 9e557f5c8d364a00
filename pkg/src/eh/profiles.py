"""Order-size profiles and freeness against a forbidden family.

A forbidden family fixes one order m and a set of sizes; a hypergraph is
free of the family when no m vertices span a forbidden number of edges.
Families mixing several orders are rejected at construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import PreconditionError
from .hypergraph import UniformHypergraph, VertexSet


@dataclass(frozen=True)
class OrderSizePair:
    """A pair (m, f): hypergraphs on m vertices with exactly f edges."""

    r: int
    m: int
    f: int

    def __post_init__(self):
        if self.m <= self.r:
            raise PreconditionError(f"order {self.m} must exceed uniformity {self.r}")
        if not 0 <= self.f <= comb(self.m, self.r):
            raise PreconditionError(
                f"size {self.f} outside 0..C({self.m},{self.r})"
            )


@dataclass(frozen=True)
class ForbiddenFamily:
    """A set of forbidden sizes at one common order m and uniformity r."""

    r: int
    m: int
    sizes: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.m <= self.r:
            raise PreconditionError(f"order {self.m} must exceed uniformity {self.r}")
        if not self.sizes:
            raise PreconditionError("family must forbid at least one size")
        bad = [f for f in self.sizes if not 0 <= f <= comb(self.m, self.r)]
        if bad:
            raise PreconditionError(f"sizes {sorted(bad)} outside 0..C({self.m},{self.r})")
        object.__setattr__(self, "sizes", frozenset(self.sizes))

    @classmethod
    def from_pairs(cls, pairs: list[OrderSizePair]) -> "ForbiddenFamily":
        if not pairs:
            raise PreconditionError("family must be nonempty")
        r, m = pairs[0].r, pairs[0].m
        if any(p.r != r or p.m != m for p in pairs):
            raise PreconditionError("all pairs must share one uniformity and order")
        return cls(r, m, frozenset(p.f for p in pairs))

    @property
    def ramsey_blocked(self) -> bool:
        """True when both the empty and the complete m-set are forbidden.

        Sufficiently large free hypergraphs then cannot exist at all;
        small-n study remains meaningful, so this is a flag, not an error.
        """
        return 0 in self.sizes and comb(self.m, self.r) in self.sizes

    def __str__(self) -> str:
        return f"{self.m}:" + ",".join(str(f) for f in sorted(self.sizes))


def parse_family(spec: str, r: int = 3) -> ForbiddenFamily:
    """Parse the CLI family syntax ``m:f1,f2,...``."""
    try:
        m_part, sizes_part = spec.split(":")
        m = int(m_part)
        sizes = frozenset(int(f) for f in sizes_part.split(","))
    except ValueError:
        raise PreconditionError(f"cannot parse family spec {spec!r}") from None
    return ForbiddenFamily(r, m, sizes)


def profile(h: UniformHypergraph, m: int) -> set[int]:
    """Set of induced edge counts over all m-subsets of the vertex set."""
    if m > h.n:
        raise PreconditionError(f"profile order {m} exceeds vertex count {h.n}")
    if m <= h.r:
        raise PreconditionError(f"profile order {m} must exceed uniformity {h.r}")
    seen: set[int] = set()
    top = comb(m, h.r)
    for vs in combinations(range(h.n), m):
        seen.add(h.induced_count(vs))
        if len(seen) == top + 1:
            break
    return seen


def is_q_free(
    h: UniformHypergraph, family: ForbiddenFamily
) -> tuple[bool, VertexSet | None]:
    """Decide freeness; on failure return the colex-least violating m-set.

    Vacuously true when the host has fewer than m vertices.
    """
    if family.r != h.r:
        raise PreconditionError(
            f"family uniformity {family.r} does not match hypergraph uniformity {h.r}"
        )
    if h.n < family.m:
        return True, None
    for vs in _colex_subsets(h.n, family.m):
        if h.induced_count(vs) in family.sizes:
            return False, vs
    return True, None


def q_complement(family: ForbiddenFamily) -> ForbiddenFamily:
    """Map each forbidden size f to C(m, r) - f.  An involution."""
    top = comb(family.m, family.r)
    return ForbiddenFamily(family.r, family.m, frozenset(top - f for f in family.sizes))


def _colex_subsets(n: int, m: int):
    """m-subsets of range(n) in ascending colex order."""
    if m == 0:
        yield ()
        return
    for top in range(m - 1, n):
        for rest in _colex_subsets(top, m - 1):
            yield (*rest, top)
