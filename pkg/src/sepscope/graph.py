"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored twice: as per-vertex bitmasks (Python ints) for the
search-heavy layers and as a sorted edge tuple for iteration and
serialization.  Vertex sets handed to the public functions may be any
iterable of ints; internally they are bitmasks.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Optional

from .errors import CapabilityError, GraphInputError

Edge = tuple[int, int]

ISO_CAP = 12


def bits(mask: int) -> list[int]:
    """Members of a bitmask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """A finite simple undirected graph with vertex set ``range(n)``."""

    __slots__ = ("n", "edges", "_adj", "_nbrs", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphInputError(f"negative vertex count {n}")
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self.edges: tuple[Edge, ...] = tuple(
            (u, v) for u in range(n) for v in bits(adj[u] >> (u + 1) << (u + 1))
        )
        self._nbrs: Optional[tuple[frozenset[int], ...]] = None
        self._hash: Optional[int] = None

    @classmethod
    def _from_masks(cls, adj: Sequence[int]) -> "Graph":
        return cls(len(adj), ((u, v) for u in range(len(adj)) for v in bits(adj[u]) if u < v))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adj(self) -> tuple[int, ...]:
        """Neighbor bitmask of every vertex."""
        return self._adj

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        if self._nbrs is None:
            self._nbrs = tuple(frozenset(bits(a)) for a in self._adj)
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph; duplicate edges collapse, loops and bad endpoints raise."""
    return Graph(n, edges)


def _check_members(g: Graph, vertices: Iterable[int]) -> list[int]:
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} not in graph on {g.n} vertices")
    return vs


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s``, relabelled in increasing order.

    Returns the graph and the index map: new vertex ``i`` is old vertex
    ``index[i]``.
    """
    index = _check_members(g, s)
    pos = {v: i for i, v in enumerate(index)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(index), edges), index


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    drop = set(_check_members(g, s))
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Contract edge ``uv``.

    The merged vertex keeps ``min(u, v)``; vertices above ``max(u, v)``
    shift down by one.
    """
    u, v = sorted((int(e[0]), int(e[1])))
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphInputError(f"({u}, {v}) is not an edge")

    def relabel(x: int) -> int:
        if x == v:
            return u
        return x - 1 if x > v else x

    edges = set()
    for x, y in g.edges:
        a, b = relabel(x), relabel(y)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph(g.n - 1, sorted(edges))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphInputError("relabelling is not a permutation of the vertex set")
    return Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph._from_masks([(full ^ a) & ~(1 << v) for v, a in enumerate(g.adj)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, edges)


def join(g: Graph, h: Graph) -> Graph:
    edges = list(disjoint_union(g, h).edges)
    edges.extend((u, g.n + v) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, edges)


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    """Connected components of the subgraph induced by the mask ``within``."""
    comps = []
    rest = within
    while rest:
        frontier = comp = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & within & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected_mask(adj: Sequence[int], mask: int) -> bool:
    if not mask:
        return False
    frontier = comp = mask & -mask
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & mask & ~comp
        comp |= new
        frontier |= new
    return comp == mask


def open_nbhd_mask(adj: Sequence[int], mask: int) -> int:
    out = 0
    m = mask
    while m:
        low = m & -m
        out |= adj[low.bit_length() - 1]
        m ^= low
    return out & ~mask


def components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by least member."""
    return [frozenset(bits(c)) for c in component_masks(g.adj, g.all_mask)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and is_connected_mask(g.adj, g.all_mask)


def neighborhood(g: Graph, s: Iterable[int], closed: bool = False) -> frozenset[int]:
    mask = to_mask(_check_members(g, s))
    out = open_nbhd_mask(g.adj, mask)
    if closed:
        out |= mask
    return frozenset(bits(out))


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(component_masks(g.adj, g.all_mask))


def is_isomorphic(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """Exact isomorphism test for graphs with at most ``ISO_CAP`` vertices.

    Returns a bijection ``phi`` (``phi[v]`` is the image in ``h`` of vertex
    ``v`` of ``g``) or None.
    """
    if g.n > ISO_CAP or h.n > ISO_CAP:
        raise CapabilityError(f"isomorphism capped at {ISO_CAP} vertices")
    if g.n != h.n or g.m != h.m:
        return None
    n = g.n

    def signature(x: Graph) -> list[tuple[int, tuple[int, ...]]]:
        deg = x.degrees()
        return [(deg[v], tuple(sorted(deg[u] for u in bits(x.adj[v])))) for v in range(n)]

    sig_g, sig_h = signature(g), signature(h)
    if sorted(sig_g) != sorted(sig_h):
        return None

    # Map g's vertices in BFS order so adjacency to mapped vertices prunes early.
    order: list[int] = []
    seen = 0
    for start in sorted(range(n), key=lambda v: -sig_g[v][0]):
        if seen >> start & 1:
            continue
        queue = [start]
        seen |= 1 << start
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(bits(g.adj[v] & ~seen), key=lambda w: -sig_g[w][0]):
                seen |= 1 << u
                queue.append(u)

    candidates = [[w for w in range(n) if sig_h[w] == sig_g[v]] for v in range(n)]
    phi = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if used >> w & 1:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(u, v) != h.has_edge(phi[u], w):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
        phi[v] = -1
        return False

    return tuple(phi) if extend(0) else None


# --- named graphs -------------------------------------------------------------

def path(k: int) -> Graph:
    """``P_k``: the path on k vertices."""
    return Graph(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    return Graph(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, ((i, p + j) for i in range(p) for j in range(q)))


def empty(k: int) -> Graph:
    return Graph(k)


HOUSE_LABELS = "abcde"

_FIXED = {
    "diamond": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    # a, b, c, d, e with edges ab, bc, cd, de, ae, ad
    "house": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 3)]),
    # join of 2P2 (vertices 0..3) with P1 (vertex 4)
    "butterfly": (5, [(0, 1), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
    # join of P1 (vertex 0) with P4 (vertices 1..4)
    "gem": (5, [(1, 2), (2, 3), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)]),
    "paw": (4, [(0, 1), (0, 2), (0, 3), (1, 2)]),
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
    "2P2": (4, [(0, 1), (2, 3)]),
}

NAMES = ("P_k", "C_k", "K_k", "K_p,q", *_FIXED)


def named(name: str) -> Graph:
    """Look up a small graph by name: ``house``, ``C5``, ``K_{2,3}``, ``P4``..."""
    key = name.strip().replace("_", "").replace("{", "").replace("}", "")
    for fixed, (n, edges) in _FIXED.items():
        if key.lower() == fixed.lower() or (fixed == "2P2" and key.upper() == "2K2"):
            return Graph(n, edges)
    kind, rest = key[:1].upper(), key[1:]
    try:
        if kind == "K" and "," in rest:
            p, q = (int(x) for x in rest.split(","))
            return complete_bipartite(p, q)
        k = int(rest)
    except ValueError:
        raise GraphInputError(f"unknown graph name {name!r}") from None
    if kind == "P":
        return path(k)
    if kind == "C":
        return cycle(k)
    if kind == "K":
        return complete(k)
    raise GraphInputError(f"unknown graph name {name!r}")
