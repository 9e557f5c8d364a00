"""OSH text codec, format version 1.

Layout::

    osh 1
    r 3
    n 4
    e 0 1 2

Header lines are mandatory and ordered.  Each edge line lists strictly
increasing vertex indices.  ``#`` starts a comment line and blank lines are
ignored on input; serialization emits edges in ascending colex order with
no comments.
"""

from __future__ import annotations

from .errors import OshParseError
from .hypergraph import UniformHypergraph, colex_rank


def parse_osh(text: str) -> UniformHypergraph:
    lines = text.splitlines()
    header = ["osh", "r", "n"]
    values: list[list[str]] = []
    edge_rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(values) < 3:
            want = header[len(values)]
            if fields[0] != want:
                raise OshParseError(f"expected {want!r} header, got {fields[0]!r}", lineno)
            if len(fields) != 2:
                raise OshParseError(f"{want!r} header takes one value", lineno)
            values.append(fields)
        elif fields[0] == "e":
            edge_rows.append((lineno, fields[1:]))
        else:
            raise OshParseError(f"unknown directive {fields[0]!r}", lineno)

    if len(values) < 3:
        raise OshParseError(f"missing {header[len(values)]!r} header", len(lines) + 1)
    if values[0][1] != "1":
        raise OshParseError(f"unsupported format version {values[0][1]!r}", 1)
    try:
        r = int(values[1][1])
        n = int(values[2][1])
    except ValueError as exc:
        raise OshParseError(f"non-integer header value: {exc}", 1) from None
    if r < 2 or n < 0:
        raise OshParseError(f"invalid dimensions r={r}, n={n}", 1)

    bits = 0
    for lineno, fields in edge_rows:
        try:
            verts = [int(f) for f in fields]
        except ValueError:
            raise OshParseError("edge vertices must be integers", lineno) from None
        if len(verts) != r:
            raise OshParseError(f"edge has arity {len(verts)}, expected {r}", lineno)
        if any(b <= a for a, b in zip(verts, verts[1:])):
            raise OshParseError("edge vertices must be strictly increasing", lineno)
        if verts[0] < 0 or verts[-1] >= n:
            raise OshParseError(f"vertex index out of range for n={n}", lineno)
        bit = 1 << colex_rank(verts)
        if bits & bit:
            raise OshParseError("duplicate edge", lineno)
        bits |= bit
    return UniformHypergraph(r, n, bits)


def serialize_osh(h: UniformHypergraph) -> str:
    out = ["osh 1", f"r {h.r}", f"n {h.n}"]
    for e in h.iter_edges():
        out.append("e " + " ".join(str(v) for v in e))
    return "\n".join(out) + "\n"


def load_osh(path) -> UniformHypergraph:
    with open(path, "r", encoding="utf-8") as f:
        return parse_osh(f.read())


def save_osh(h: UniformHypergraph, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_osh(h))
