"""Parametrized graph families with independent axiom validators.

Vertices are emitted in naming order: hubs first, then path interiors in
index order.  Each ``validate_*`` function re-derives the family's defining
properties from the graph alone (plus the role assignment) and raises
``ParameterError`` on failure.
"""
from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Optional

from .errors import CreatureAxiomError, ParameterError
from .graph import Edge, Graph, bits, is_connected_mask, to_mask


# --- k-theta ------------------------------------------------------------------

def k_theta(k: int) -> Graph:
    """Hubs a=0, b=1; a_i = 1+i, b_i = 1+k+i for i in 1..k."""
    if k < 3:
        raise ParameterError("k-theta needs k >= 3")
    edges = []
    for i in range(1, k + 1):
        ai, bi = 1 + i, 1 + k + i
        edges += [(0, ai), (ai, bi), (bi, 1)]
    return Graph(2 * k + 2, edges)


def validate_k_theta(g: Graph, k: int, a: int = 0, b: int = 1) -> None:
    if g.n != 2 * k + 2 or g.m != 3 * k:
        raise ParameterError("k-theta has 2k+2 vertices and 3k edges")
    if g.has_edge(a, b) or g.degree(a) != k or g.degree(b) != k:
        raise ParameterError("hubs must be nonadjacent of degree k")
    na, nb = g.adj[a], g.adj[b]
    if na & nb:
        raise ParameterError("hubs share a neighbor")
    # every a-neighbor has exactly one further neighbor, which is a b-neighbor
    matched = 0
    for x in bits(na):
        rest = g.adj[x] & ~(1 << a)
        if rest.bit_count() != 1 or not rest & nb:
            raise ParameterError(f"vertex {x} does not lie on a length-3 a,b-path")
        matched |= rest
    if matched != nb:
        raise ParameterError("a,b-paths are not internally disjoint")


# --- k-prism ------------------------------------------------------------------

def k_prism(k: int) -> Graph:
    """Cliques a_1..a_k = 0..k-1 and b_1..b_k = k..2k-1, matched a_i b_i."""
    if k < 3:
        raise ParameterError("k-prism needs k >= 3")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(k + i, k + j) for i in range(k) for j in range(i + 1, k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph(2 * k, edges)


def validate_k_prism(g: Graph, k: int) -> None:
    a = list(range(k))
    b = list(range(k, 2 * k))
    if g.n != 2 * k:
        raise ParameterError("k-prism has 2k vertices")
    for side in (a, b):
        for i in side:
            for j in side:
                if i < j and not g.has_edge(i, j):
                    raise ParameterError(f"{i},{j} should be adjacent inside a clique")
    for i in range(k):
        for j in range(k):
            if g.has_edge(a[i], b[j]) != (i == j):
                raise ParameterError(f"a_{i + 1} b_{j + 1} adjacency violates the matching")


# --- k-skinny ladder ----------------------------------------------------------

def k_skinny_ladder(k: int) -> Graph:
    """p_i = i-1, q_i = k+i-1, r_i = 2k+i-1."""
    if k < 1:
        raise ParameterError("skinny ladder needs k >= 1")
    p = list(range(k))
    q = list(range(k, 2 * k))
    r = list(range(2 * k, 3 * k))
    edges = [(p[i], p[i + 1]) for i in range(k - 1)]
    edges += [(q[i], q[i + 1]) for i in range(k - 1)]
    edges += [(p[i], r[i]) for i in range(k)] + [(q[i], r[i]) for i in range(k)]
    return Graph(3 * k, edges)


def validate_k_skinny_ladder(g: Graph, k: int) -> None:
    p = list(range(k))
    q = list(range(k, 2 * k))
    r = list(range(2 * k, 3 * k))
    if g.n != 3 * k:
        raise ParameterError("skinny ladder has 3k vertices")
    for path in (p, q):
        for i in path:
            for j in path:
                if i < j and g.has_edge(i, j) != (j == i + 1):
                    raise ParameterError("P and Q must be induced paths")
    if to_mask(p) & _nbhd_union(g, q):
        raise ParameterError("P and Q must be anticomplete")
    rmask = to_mask(r)
    for i, ri in enumerate(r):
        if g.adj[ri] & rmask:
            raise ParameterError("R must be independent")
        if g.adj[ri] != (1 << p[i]) | (1 << q[i]):
            raise ParameterError(f"r_{i + 1} must see exactly p_{i + 1} and q_{i + 1}")


def _nbhd_union(g: Graph, vs: Sequence[int]) -> int:
    out = 0
    for v in vs:
        out |= g.adj[v]
    return out


# --- k-creature ---------------------------------------------------------------

@dataclass(frozen=True)
class CreatureSpec:
    """Explicit description of a k-creature.

    Local vertex indices: A is ``0..a_size-1``, B is ``0..b_size-1``,
    X and Y are ``0..k-1``.  ``x_attach[i]`` lists the A-vertices adjacent
    to x_i.  ``extra_edges`` are given in the global labelling (A, B, X, Y
    concatenated) and exist so that invalid creatures can be described.
    """

    k: int
    a_size: int = 1
    a_edges: tuple[Edge, ...] = ()
    b_size: int = 1
    b_edges: tuple[Edge, ...] = ()
    x_attach: Optional[tuple[tuple[int, ...], ...]] = None
    y_attach: Optional[tuple[tuple[int, ...], ...]] = None
    x_edges: tuple[Edge, ...] = ()
    y_edges: tuple[Edge, ...] = ()
    extra_edges: tuple[Edge, ...] = ()

    def parts(self) -> tuple[list[int], list[int], list[int], list[int]]:
        a = list(range(self.a_size))
        b = list(range(self.a_size, self.a_size + self.b_size))
        x0 = self.a_size + self.b_size
        x = list(range(x0, x0 + self.k))
        y = list(range(x0 + self.k, x0 + 2 * self.k))
        return a, b, x, y


def k_creature(spec: CreatureSpec) -> Graph:
    if spec.k < 1:
        raise ParameterError("k-creature needs k >= 1")
    if spec.a_size < 1 or spec.b_size < 1:
        raise CreatureAxiomError("i", "A and B must be nonempty")
    a, b, x, y = spec.parts()
    x_attach = spec.x_attach or tuple(tuple(range(spec.a_size)) for _ in range(spec.k))
    y_attach = spec.y_attach or tuple(tuple(range(spec.b_size)) for _ in range(spec.k))
    if len(x_attach) != spec.k or len(y_attach) != spec.k:
        raise CreatureAxiomError("iv", "one attachment list per x_i and per y_i")
    edges = [(a[u], a[v]) for u, v in spec.a_edges]
    edges += [(b[u], b[v]) for u, v in spec.b_edges]
    edges += [(x[u], x[v]) for u, v in spec.x_edges]
    edges += [(y[u], y[v]) for u, v in spec.y_edges]
    edges += [(x[i], a[t]) for i, ts in enumerate(x_attach) for t in ts]
    edges += [(y[i], b[t]) for i, ts in enumerate(y_attach) for t in ts]
    edges += [(x[i], y[i]) for i in range(spec.k)]
    edges += list(spec.extra_edges)
    g = Graph(len(a) + len(b) + 2 * spec.k, edges)
    validate_k_creature(g, a, b, x, y)
    return g


def validate_k_creature(g: Graph, a: Sequence[int], b: Sequence[int], x: Sequence[int], y: Sequence[int]) -> None:
    """Check axioms (i)-(iv) for the given partition; raise naming the first failure."""
    am, bm, xm, ym = (to_mask(s) for s in (a, b, x, y))
    if not (am and bm and xm and ym):
        raise CreatureAxiomError("i", "all four parts must be nonempty")
    if am & bm or am & xm or am & ym or bm & xm or bm & ym or xm & ym:
        raise CreatureAxiomError("i", "parts must be pairwise disjoint")
    if (am | bm | xm | ym) != g.all_mask:
        raise CreatureAxiomError("i", "parts must cover the vertex set")
    if not is_connected_mask(g.adj, am) or not is_connected_mask(g.adj, bm):
        raise CreatureAxiomError("i", "A and B must induce connected subgraphs")
    if _nbhd_union(g, a) & (ym | bm):
        raise CreatureAxiomError("ii", "A must be anticomplete to Y and B")
    if _nbhd_union(g, b) & (am | xm):
        raise CreatureAxiomError("ii", "B must be anticomplete to A and X")
    for v in x:
        if not g.adj[v] & am:
            raise CreatureAxiomError("iii", f"x-vertex {v} has no neighbor in A")
    for v in y:
        if not g.adj[v] & bm:
            raise CreatureAxiomError("iii", f"y-vertex {v} has no neighbor in B")
    if len(x) != len(y):
        raise CreatureAxiomError("iv", "|X| must equal |Y|")
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            if g.has_edge(xi, yj) != (i == j):
                raise CreatureAxiomError("iv", f"x_{i + 1} y_{j + 1} adjacency breaks the matching")


# --- Gamma_{i,j,k} ------------------------------------------------------------

@dataclass(frozen=True)
class ThreePaths:
    """Hubs and the three hub-to-hub paths (each listed from a to b)."""

    a: int
    b: int
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @property
    def lengths(self) -> tuple[int, int, int]:
        return tuple(len(p) - 1 for p in self.paths)  # type: ignore[return-value]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)


def gamma_layout(i: int, j: int, k: int) -> ThreePaths:
    """Vertex roles of ``gamma(i, j, k)``: a=0, b=1, then path interiors."""
    nxt = 2
    paths = []
    for length in (i, j, k):
        inner = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        paths.append(tuple([0, *inner, 1]))
    return ThreePaths(0, 1, tuple(paths))  # type: ignore[arg-type]


def gamma(i: int, j: int, k: int) -> Graph:
    """Two hubs joined by three internally disjoint paths of lengths i, j, k."""
    lengths = (i, j, k)
    if min(lengths) < 1:
        raise ParameterError("path lengths must be positive")
    if sum(1 for x in lengths if x == 1) > 1:
        raise ParameterError("at most one path may have length 1")
    layout = gamma_layout(i, j, k)
    edges = [(p[t], p[t + 1]) for p in layout.paths for t in range(len(p) - 1)]
    g = Graph(i + j + k - 1, edges)
    validate_three_paths(g, layout)
    return g


def validate_three_paths(g: Graph, tp: ThreePaths, vertex_set_is_whole_graph: bool = True) -> None:
    """Check that ``tp`` describes an induced Gamma_{i,j,k} in ``g``.

    The three paths must share only their ends, and the subgraph induced by
    their union must contain exactly the path edges.  For i, j, k >= 2 this
    is the same as each pairwise union inducing a hole; when one path is a
    single edge the pairwise unions containing it are triangles or longer
    chordless cycles, and the union of the other two carries that edge as
    its only chord.
    """
    lengths = tp.lengths
    if min(lengths) < 1 or sum(1 for x in lengths if x == 1) > 1:
        raise ParameterError(f"bad path lengths {lengths}")
    seen: set[int] = set()
    for p in tp.paths:
        if p[0] != tp.a or p[-1] != tp.b:
            raise ParameterError("every path must run from a to b")
        inner = p[1:-1]
        if len(set(inner)) != len(inner) or seen & set(inner) or {tp.a, tp.b} & set(inner):
            raise ParameterError("paths must be internally disjoint")
        seen |= set(inner)
    verts = tp.vertices
    if vertex_set_is_whole_graph and verts != frozenset(range(g.n)):
        raise ParameterError("paths must cover the graph")
    want = {tuple(sorted((p[t], p[t + 1]))) for p in tp.paths for t in range(len(p) - 1)}
    vm = to_mask(verts)
    have = {(u, v) for u in verts for v in bits(g.adj[u] & vm) if u < v}
    if have != want:
        extra = sorted(have - want)
        missing = sorted(want - have)
        raise ParameterError(f"not an induced three-path graph: extra edges {extra}, missing edges {missing}")


# --- long twin wheel ----------------------------------------------------------

def long_twin_wheel(hole_length: int) -> Graph:
    """Hole 0..L-1 plus center L adjacent to hole vertices 0, 1, 2."""
    if hole_length < 5:
        raise ParameterError("a long twin wheel needs a hole of length >= 5")
    L = hole_length
    edges = [(t, (t + 1) % L) for t in range(L)] + [(L, 0), (L, 1), (L, 2)]
    return Graph(L + 1, edges)


def validate_twin_wheel(g: Graph, hole: Sequence[int], center: int, induced_only: bool = False) -> None:
    """Hole of length >= 5 whose vertices the center sees as a 3-vertex subpath."""
    L = len(hole)
    if L < 5 or len(set(hole)) != L or center in hole:
        raise ParameterError("need a hole of >= 5 distinct vertices and a separate center")
    if not induced_only and g.n != L + 1:
        raise ParameterError("twin wheel has exactly hole + center vertices")
    pos = {v: t for t, v in enumerate(hole)}
    hm = to_mask(hole)
    for v in hole:
        for u in bits(g.adj[v] & hm):
            if (pos[u] - pos[v]) % L not in (1, L - 1):
                raise ParameterError(f"chord {v}-{u} in the hole")
    for t in range(L):
        if not g.has_edge(hole[t], hole[(t + 1) % L]):
            raise ParameterError("hole is not a cycle")
    seen = sorted(pos[u] for u in bits(g.adj[center] & hm))
    if len(seen) != 3:
        raise ParameterError("center must have exactly three hole neighbors")
    if not any({(s + d) % L for d in range(3)} == set(seen) for s in seen):
        raise ParameterError("center's hole neighbors must be consecutive")


# --- subdivision --------------------------------------------------------------

def subdivide(g: Graph, counts: Sequence[int] | Mapping[Edge, int]) -> Graph:
    """Replace each edge uv (u < v) by a u,v-path with ``counts[uv]`` new internal vertices.

    ``counts`` is either a sequence aligned with ``g.edges`` or a mapping
    keyed by edge.  New vertices are numbered from ``g.n`` upwards, edge by
    edge in ``g.edges`` order, running from u to v.
    """
    if isinstance(counts, Mapping):
        per_edge = [int(counts.get(e, counts.get((e[1], e[0]), 0))) for e in g.edges]
    else:
        per_edge = [int(c) for c in counts]
        if len(per_edge) != g.m:
            raise ParameterError(f"expected {g.m} subdivision counts, got {len(per_edge)}")
    if any(c < 0 for c in per_edge):
        raise ParameterError("subdivision counts must be non-negative")
    edges = []
    nxt = g.n
    for (u, v), c in zip(g.edges, per_edge):
        chain = [u, *range(nxt, nxt + c), v]
        nxt += c
        edges += [(chain[t], chain[t + 1]) for t in range(len(chain) - 1)]
    return Graph(nxt, edges)


# --- family dispatch ----------------------------------------------------------

FAMILIES = ("theta", "prism", "skinny-ladder", "creature", "gamma", "twin-wheel")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = field(default_factory=tuple)

    def build(self) -> Graph:
        p = self.params
        need = 3 if self.family == "gamma" else 1
        if len(p) != need:
            raise ParameterError(f"{self.family} takes {need} integer parameter(s)")
        if self.family == "theta":
            return k_theta(p[0])
        if self.family == "prism":
            return k_prism(p[0])
        if self.family == "skinny-ladder":
            return k_skinny_ladder(p[0])
        if self.family == "creature":
            return k_creature(CreatureSpec(k=p[0]))
        if self.family == "gamma":
            return gamma(*p)
        if self.family == "twin-wheel":
            return long_twin_wheel(p[0])
        raise ParameterError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")

