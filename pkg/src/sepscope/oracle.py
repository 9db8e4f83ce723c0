"""Brute-force containment referee.

Exhaustive (exponential) checks for induced subgraphs, induced minors and
induced topological minors, the thin-walk normalization of induced minor
models, and the exact feedback vertex number.  Everything here is capped to
desk-scale inputs and raises ``CapabilityError`` beyond the caps rather than
degrading silently.  The polynomial recognizers are validated against this
module, so nothing in it relies on their structural characterizations.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import CapabilityError, ModelError
from .graph import (
    Graph,
    bits,
    component_masks,
    is_connected_mask,
    is_forest,
    open_nbhd_mask,
    to_mask,
)
from .generators import subdivide

SUBGRAPH_PATTERN_CAP = 12
MINOR_PATTERN_CAP = 6
MINOR_HOST_CAP = 14
FVS_CAP = 14


# --- induced minor models -----------------------------------------------------

@dataclass(frozen=True)
class InducedMinorModel:
    """Branch set ``branch_sets[v]`` in ``host`` for every pattern vertex ``v``."""

    pattern: Graph
    host: Graph
    branch_sets: tuple[frozenset[int], ...]

    def validate(self) -> None:
        h, g = self.pattern, self.host
        if len(self.branch_sets) != h.n:
            raise ModelError(f"{len(self.branch_sets)} branch sets for a pattern on {h.n} vertices")
        masks = []
        used = 0
        for v, xs in enumerate(self.branch_sets):
            mask = to_mask(xs)
            if not mask:
                raise ModelError(f"branch set of {v} is empty")
            if mask & ~g.all_mask:
                raise ModelError(f"branch set of {v} leaves the host")
            if mask & used:
                raise ModelError(f"branch set of {v} overlaps an earlier one")
            if not is_connected_mask(g.adj, mask):
                raise ModelError(f"branch set of {v} is not connected")
            used |= mask
            masks.append(mask)
        for u in range(h.n):
            nu = open_nbhd_mask(g.adj, masks[u])
            for v in range(u + 1, h.n):
                touching = bool(nu & masks[v])
                if touching != h.has_edge(u, v):
                    kind = "missing" if h.has_edge(u, v) else "forbidden"
                    raise ModelError(f"{kind} edge between branch sets of {u} and {v}")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except ModelError:
            return False
        return True

    def to_text(self) -> str:
        return "".join(
            f"{v}: {{{', '.join(str(x) for x in sorted(xs))}}}\n" for v, xs in enumerate(self.branch_sets)
        )

    @classmethod
    def from_text(cls, text: str, pattern: Graph, host: Graph) -> "InducedMinorModel":
        sets: dict[int, frozenset[int]] = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            head, _, body = line.partition(":")
            body = body.strip().strip("{}")
            sets[int(head)] = frozenset(int(t) for t in body.split(",") if t.strip())
        return cls(pattern, host, tuple(sets.get(v, frozenset()) for v in range(pattern.n)))


# --- induced subgraphs --------------------------------------------------------

def _pattern_order(h: Graph) -> list[int]:
    """Greedy order: each next vertex has the most already-placed neighbors."""
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        v = max(remaining, key=lambda x: ((h.adj[x] & placed).bit_count(), h.degree(x), -x))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def _embed(g: Graph, h: Graph, region: int) -> Optional[tuple[int, ...]]:
    if h.n > region.bit_count() or h.m > g.m:
        return None
    order = _pattern_order(h)
    hdeg = h.degrees()
    gdeg = [(g.adj[w] & region).bit_count() for w in range(g.n)]
    phi = [-1] * h.n
    adj = g.adj

    def extend(i: int, used: int) -> bool:
        if i == h.n:
            return True
        v = order[i]
        cand = region & ~used
        for j in range(i):
            u = order[j]
            if h.has_edge(u, v):
                cand &= adj[phi[u]]
            else:
                cand &= ~adj[phi[u]]
            if not cand:
                return False
        for w in bits(cand):
            if gdeg[w] < hdeg[v]:
                continue
            phi[v] = w
            if extend(i + 1, used | 1 << w):
                return True
        return False

    return tuple(phi) if extend(0, 0) else None


def contains_induced_subgraph(
    g: Graph, h: Graph, cap: Optional[int] = SUBGRAPH_PATTERN_CAP
) -> Optional[tuple[int, ...]]:
    """Injective map ``phi`` from V(h) into V(g) preserving adjacency and non-adjacency."""
    if cap is not None and h.n > cap:
        raise CapabilityError(f"induced subgraph pattern capped at {cap} vertices")
    return _embed(g, h, g.all_mask)


def validate_embedding(g: Graph, h: Graph, phi: Sequence[int]) -> None:
    if len(phi) != h.n or len(set(phi)) != h.n or any(not 0 <= w < g.n for w in phi):
        raise ModelError("embedding is not an injective map into the host")
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if h.has_edge(u, v) != g.has_edge(phi[u], phi[v]):
                raise ModelError(f"embedding breaks the pair {u},{v}")


# --- induced minors -----------------------------------------------------------

def _connected_subsets(adj: Sequence[int], n: int) -> list[int]:
    subs = [s for s in range(1, 1 << n) if is_connected_mask(adj, s)]
    subs.sort(key=lambda s: (s.bit_count(), s))
    return subs


def _shrink(adj: Sequence[int], comp: int, must_touch: Sequence[int]) -> int:
    """Greedily drop vertices while the set stays connected and touches every target."""
    for v in bits(comp)[::-1]:
        smaller = comp & ~(1 << v)
        if not smaller or not is_connected_mask(adj, smaller):
            continue
        nb = open_nbhd_mask(adj, smaller)
        if all(nb & t for t in must_touch):
            comp = smaller
    return comp


def contains_induced_minor(
    g: Graph,
    h: Graph,
    max_pattern: int = MINOR_PATTERN_CAP,
    max_host: int = MINOR_HOST_CAP,
) -> Optional[InducedMinorModel]:
    """Exhaustive branch-and-prune search for an induced minor model of ``h`` in ``g``.

    Pattern vertices are assigned connected host sets one at a time, small
    sets first.  A set is rejected as soon as it touches the closed
    neighborhood of a branch set it must avoid, misses a branch set it must
    touch, or leaves some later pattern vertex with no room.  The last
    pattern vertex is not enumerated: any component of the remaining
    admissible region that touches all of its required neighbors works.
    Absence is therefore certified by exhausting the search.
    """
    if h.n > max_pattern:
        raise CapabilityError(f"induced minor pattern capped at {max_pattern} vertices")
    if g.n > max_host:
        raise CapabilityError(f"induced minor host capped at {max_host} vertices")
    if h.n == 0:
        return InducedMinorModel(h, g, ())
    if h.n > g.n or h.m > g.m:
        return None

    adj = g.adj
    full = g.all_mask
    hn = h.n
    last = max(range(hn), key=lambda x: (h.degree(x), -x))
    rest = _pattern_order(Graph(hn, [e for e in h.edges if last not in e]))
    order = [v for v in rest if v != last] + [last]
    pos = {v: i for i, v in enumerate(order)}
    # earlier neighbors / non-neighbors of each vertex in the assignment order
    earlier_nb = [[u for u in order[: pos[v]] if h.has_edge(u, v)] for v in range(hn)]
    earlier_non = [[u for u in order[: pos[v]] if not h.has_edge(u, v)] for v in range(hn)]

    subsets = _connected_subsets(adj, g.n)
    nbhd: dict[int, int] = {}

    def open_n(s: int) -> int:
        r = nbhd.get(s)
        if r is None:
            r = nbhd[s] = open_nbhd_mask(adj, s)
        return r

    assign: dict[int, int] = {}

    def room_ok(used: int) -> bool:
        for w in order[len(assign) :]:
            avail = full & ~used
            for u, xs in assign.items():
                if not h.has_edge(u, w):
                    avail &= ~open_n(xs)
            if not avail:
                return False
            for u, xs in assign.items():
                if h.has_edge(u, w) and not avail & open_n(xs):
                    return False
        return True

    def finish(used: int) -> Optional[int]:
        avail = full & ~used
        for u in earlier_non[last]:
            avail &= ~open_n(assign[u])
        targets = [assign[u] for u in earlier_nb[last]]
        for comp in component_masks(adj, avail):
            nb = open_n(comp)
            if all(nb & t for t in targets):
                return _shrink(adj, comp, targets)
        return None

    def search(i: int, pool: list[int], used: int) -> bool:
        if i == hn - 1:
            xs = finish(used)
            if xs is None:
                return False
            assign[last] = xs
            return True
        v = order[i]
        forbid = used
        for u in earlier_non[v]:
            forbid |= open_n(assign[u])
        targets = [open_n(assign[u]) for u in earlier_nb[v]]
        for s in pool:
            if s & forbid:
                continue
            if not all(s & t for t in targets):
                continue
            assign[v] = s
            new_used = used | s
            if room_ok(new_used):
                next_pool = [t for t in pool if not t & new_used]
                if search(i + 1, next_pool, new_used):
                    return True
            del assign[v]
        return False

    if not search(0, subsets, 0):
        return None
    branch = tuple(frozenset(bits(assign[v])) for v in range(hn))
    return InducedMinorModel(h, g, branch)


# --- induced topological minors -----------------------------------------------

@dataclass(frozen=True)
class SubdivisionEmbedding:
    """A subdivision of ``pattern`` embedded as an induced subgraph of ``host``.

    ``counts`` is aligned with ``pattern.edges``; ``embedding[x]`` is the
    host vertex of subdivision vertex ``x``.
    """

    pattern: Graph
    host: Graph
    counts: tuple[int, ...]
    embedding: tuple[int, ...]

    @property
    def subdivision(self) -> Graph:
        return subdivide(self.pattern, self.counts)

    def validate(self) -> None:
        if len(self.counts) != self.pattern.m or any(c < 0 for c in self.counts):
            raise ModelError("subdivision counts do not match the pattern's edges")
        validate_embedding(self.host, self.subdivision, self.embedding)

    def to_model(self) -> InducedMinorModel:
        """Fold each subdivided edge's interior into the branch set of its lower end."""
        h = self.pattern
        sets = [{self.embedding[v]} for v in range(h.n)]
        nxt = h.n
        for (u, _v), c in zip(h.edges, self.counts):
            sets[u].update(self.embedding[x] for x in range(nxt, nxt + c))
            nxt += c
        return InducedMinorModel(h, self.host, tuple(frozenset(s) for s in sets))


@lru_cache(maxsize=64)
def _edge_automorphisms(h: Graph) -> tuple[tuple[int, ...], ...]:
    """Automorphisms of ``h`` acting on the index positions of ``h.edges``."""
    index = {e: i for i, e in enumerate(h.edges)}
    perms = []
    for p in itertools.permutations(range(h.n)):
        if all(h.has_edge(p[u], p[v]) for u, v in h.edges):
            perms.append(tuple(index[tuple(sorted((p[u], p[v])))] for u, v in h.edges))
    return tuple(perms)


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for tail in _compositions(total - first, parts - 1):
            yield (first, *tail)


@lru_cache(maxsize=256)
def subdivision_vectors(h: Graph, extra: int) -> tuple[tuple[int, ...], ...]:
    """Count vectors with ``extra`` added vertices, one per orbit under Aut(h)."""
    autos = _edge_automorphisms(h) if h.n <= 8 else ((tuple(range(h.m))),)
    seen = set()
    out = []
    for vec in sorted(_compositions(extra, h.m), reverse=True):
        key = min(tuple(vec[p[i]] for i in range(h.m)) for p in autos)
        if key not in seen:
            seen.add(key)
            out.append(vec)
    return tuple(out)


def contains_induced_topological_minor(
    g: Graph,
    h: Graph,
    max_pattern: int = MINOR_PATTERN_CAP,
    max_host: int = MINOR_HOST_CAP,
) -> Optional[SubdivisionEmbedding]:
    """Search subdivisions of ``h`` by total added vertices, ascending."""
    if h.n > max_pattern:
        raise CapabilityError(f"induced topological minor pattern capped at {max_pattern} vertices")
    if g.n > max_host:
        raise CapabilityError(f"induced topological minor host capped at {max_host} vertices")
    for extra in range(0, g.n - h.n + 1):
        if h.m + extra > g.m:
            break
        for counts in subdivision_vectors(h, extra):
            s = subdivide(h, counts)
            phi = _embed(g, s, g.all_mask)
            if phi is not None:
                return SubdivisionEmbedding(h, g, counts, phi)
    return None


# --- thin walks ---------------------------------------------------------------

@dataclass(frozen=True)
class ThinWalk:
    vertices: tuple[int, ...]

    @property
    def closed(self) -> bool:
        return len(self.vertices) > 2 and self.vertices[0] == self.vertices[-1]

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def edges(self) -> set[tuple[int, int]]:
        w = self.vertices
        return {tuple(sorted((w[i], w[i + 1]))) for i in range(len(w) - 1)}  # type: ignore[misc]


def validate_thin_walk(h: Graph, walk: ThinWalk) -> None:
    w = walk.vertices
    if len(w) < 2:
        raise ModelError("a walk needs at least two vertices")
    body = w[:-1] if walk.closed else w
    if len(set(body)) != len(body):
        raise ModelError("walk repeats a vertex")
    for i in range(len(w) - 1):
        if not h.has_edge(w[i], w[i + 1]):
            raise ModelError(f"{w[i]}-{w[i + 1]} is not an edge")
    for v in walk.internal:
        if h.degree(v) != 2:
            raise ModelError(f"internal vertex {v} has degree {h.degree(v)}")


def validate_walk_collection(h: Graph, walks: Sequence[ThinWalk]) -> None:
    """Each walk thin, walks pairwise edge-disjoint, and no internal vertex of one
    walk lying on another walk at all (the stronger form the normalization needs)."""
    seen_edges: set[tuple[int, int]] = set()
    for i, walk in enumerate(walks):
        validate_thin_walk(h, walk)
        es = walk.edges()
        if es & seen_edges:
            raise ModelError("walks are not edge-disjoint")
        seen_edges |= es
        for j, other in enumerate(walks):
            if i != j and set(walk.internal) & set(other.vertices):
                raise ModelError(f"an internal vertex of walk {i} lies on walk {j}")


def thin_walks(h: Graph) -> list[ThinWalk]:
    """One walk per maximal chain of degree-2 vertices, extended to its ends.

    A cycle component made only of degree-2 vertices yields one closed walk
    based at its least vertex.  Walks without internal vertices (single
    edges) are not listed.
    """
    deg = h.degrees()
    done = 0
    walks = []
    for s in range(h.n):
        if deg[s] != 2 or done >> s & 1:
            continue
        # walk outward from s in both directions until a non-degree-2 vertex or a loop back
        chain = [s]
        done |= 1 << s
        ends = []
        closed = False
        for start in sorted(h.neighbors(s)):
            prev, cur = s, start
            side = []
            while deg[cur] == 2 and cur != s:
                side.append(cur)
                done |= 1 << cur
                nxt = next(x for x in h.neighbors(cur) if x != prev)
                prev, cur = cur, nxt
            if cur == s:
                closed = True
                chain = [s, *side]
                break
            ends.append((side, cur))
        if closed:
            base = min(chain)
            k = chain.index(base)
            cyc = chain[k:] + chain[:k]
            if cyc[1] > cyc[-1]:
                cyc = [cyc[0], *reversed(cyc[1:])]
            walks.append(ThinWalk(tuple(cyc + [base])))
            continue
        (left, lend), (right, rend) = ends
        seq = [lend, *reversed(left), s, *right, rend]
        if (seq[0], seq[1]) > (seq[-1], seq[-2]):
            seq.reverse()
        walks.append(ThinWalk(tuple(seq)))
    walks.sort(key=lambda w: w.vertices)
    return walks


def _shortest_monotone_walk(g: Graph, layers: Sequence[int]) -> list[int]:
    """Lexicographically least among the shortest W-monotone walks.

    ``layers[i]`` is the branch set (mask) of the i-th walk vertex.  The walk
    starts at one vertex of layer 0, steps into layer 1, may move inside each
    middle layer, steps layer to layer, and stops on entering the last layer.
    """
    adj = g.adj
    k = len(layers)
    # distance to the end, computed backwards over states (vertex, layer)
    dist: dict[tuple[int, int], int] = {}
    frontier = []
    for x in bits(layers[k - 1]):
        dist[x, k - 1] = 0
        frontier.append((x, k - 1))
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x, i in frontier:
            preds = []
            if i >= 1:
                preds += [(y, i - 1) for y in bits(adj[x] & layers[i - 1])]
            if 1 <= i <= k - 2:
                preds += [(y, i) for y in bits(adj[x] & layers[i])]
            for st in preds:
                if st not in dist:
                    dist[st] = d
                    nxt.append(st)
        frontier = nxt
    starts = [(x, 0) for x in bits(layers[0]) if (x, 0) in dist]
    if not starts:
        raise ModelError("no monotone walk: consecutive branch sets are not adjacent")
    best = min(dist[s] for s in starts)
    cur = min(s for s in starts if dist[s] == best)
    walk = [cur[0]]
    while dist[cur] > 0:
        x, i = cur
        options = []
        if i + 1 <= k - 1:
            options += [(y, i + 1) for y in bits(adj[x] & layers[i + 1])]
        if 1 <= i <= k - 2:
            options += [(y, i) for y in bits(adj[x] & layers[i])]
        cur = min(
            (st for st in options if dist.get(st) == dist[cur] - 1),
            key=lambda st: (st[0], st[1]),
        )
        walk.append(cur[0])
    return walk


def normalize_thin_walk_model(model: InducedMinorModel, walks: Sequence[ThinWalk]) -> InducedMinorModel:
    """Rebuild the model so every walk-internal pattern vertex gets a singleton.

    For each walk (w_1..w_k) take the lexicographically least shortest
    monotone walk z_1..z_r through the branch sets; w_i gets {z_i} for the
    internal positions and the leftover tail z_k..z_{r-1} joins the branch
    set of w_k.  New interior sets stay inside the union of the old ones.
    """
    model.validate()
    validate_walk_collection(model.pattern, walks)
    sets = [to_mask(xs) for xs in model.branch_sets]
    g = model.host
    for walk in walks:
        w = walk.vertices
        k = len(w)
        if k <= 2:
            continue
        z = _shortest_monotone_walk(g, [sets[v] for v in w])
        r = len(z)
        for i in range(1, k - 1):
            sets[w[i]] = 1 << z[i]
        tail = to_mask(z[k - 1 : r - 1])
        sets[w[-1]] |= tail
        if walk.closed:
            sets[w[0]] = sets[w[-1]]
    out = InducedMinorModel(model.pattern, g, tuple(frozenset(bits(s)) for s in sets))
    out.validate()
    return out


# --- feedback vertex number ---------------------------------------------------

def feedback_vertex_number(g: Graph, cap: int = FVS_CAP) -> int:
    """Minimum number of vertices whose removal leaves a forest (subset brute force)."""
    if g.n > cap:
        raise CapabilityError(f"feedback vertex number capped at {cap} vertices")
    if is_forest(g):
        return 0
    adj = g.adj
    full = g.all_mask
    for size in range(1, g.n + 1):
        for drop in itertools.combinations(range(g.n), size):
            keep = full & ~to_mask(drop)
            edges = sum((adj[v] & keep).bit_count() for v in bits(keep)) // 2
            if edges == keep.bit_count() - len(component_masks(adj, keep)):
                return size
    return g.n
