"""graph6 (short form), plain edge lists, and DOT export."""
from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path
from typing import Optional

from .errors import Graph6ParseError, GraphInputError
from .graph import Graph

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphInputError(f"graph6 short form holds at most {GRAPH6_MAX_N} vertices")
    bitstream = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bitstream += [0] * (-len(bitstream) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bitstream), 6):
        value = 0
        for b in bitstream[k : k + 6]:
            value = value << 1 | b
        out.append(chr(63 + value))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header).

    Only the single-byte size form is accepted.  Padding bits must be zero
    so that every accepted string is the canonical encoding of its graph.
    """
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
        base = len(_HEADER)
    if not s:
        raise Graph6ParseError("empty graph6 string", base)
    values = []
    for i, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6ParseError(f"byte {ch!r} outside the graph6 range 63..126", base + i)
        values.append(code - 63)
    n = values[0]
    if n == 63:
        raise Graph6ParseError("long size form (n > 62) is not supported", base)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(values) - 1 < nbytes:
        raise Graph6ParseError(
            f"truncated adjacency field: need {nbytes} bytes, got {len(values) - 1}",
            base + len(values),
        )
    if len(values) - 1 > nbytes:
        raise Graph6ParseError("trailing bytes after adjacency field", base + 1 + nbytes)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if values[1 + k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    pad = nbytes * 6 - nbits
    if pad and values[nbytes] & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits", base + nbytes)
    return Graph(n, edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphInputError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except ValueError as exc:
        raise GraphInputError(f"non-integer token in edge list: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]):
        raise GraphInputError("every edge line must hold exactly two vertices")
    if len(edges) != m:
        raise GraphInputError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def detect_format(text: str) -> str:
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    return "edgelist" if " " in first or "\t" in first else "graph6"


def parse_graphs(text: str, fmt: Optional[str] = None) -> list[Graph]:
    """All graphs in a file body: one per line for graph6, one per file for edge lists."""
    fmt = fmt or detect_format(text)
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    if fmt != "graph6":
        raise GraphInputError(f"unknown format {fmt!r}")
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def read_graphs(path: str | Path, fmt: Optional[str] = None) -> list[Graph]:
    return parse_graphs(Path(path).read_text(), fmt)


def to_dot(
    g: Graph,
    name: str = "G",
    highlight: Iterable[int] = (),
    highlight_edges: Iterable[tuple[int, int]] = (),
    labels: Optional[dict[int, str]] = None,
) -> str:
    """Render as an undirected DOT graph, with optional highlighted vertices/edges."""
    hv = set(highlight)
    he = {tuple(sorted(e)) for e in highlight_edges}
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = []
        if labels and v in labels:
            attrs.append(f'label="{labels[v]}"')
        if v in hv:
            attrs.append('style=filled fillcolor="#f4a582"')
        lines.append(f"  {v}" + (f" [{' '.join(attrs)}]" if attrs else "") + ";")
    for u, v in g.edges:
        attr = ' [color="#b2182b" penwidth=2]' if (u, v) in he else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
