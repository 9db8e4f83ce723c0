"""Three-in-a-tree, long unichords, and long thetas.

Both black-box subproblems are solved exactly by pruned search over induced
paths, with a node budget.  Running out of budget raises ``BudgetExceeded``
and is never reported as absence.  ``find_long_theta`` is the five-tuple
reduction to three-in-a-tree.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceeded, GraphInputError, ModelError, ParameterError
from .generators import ThreePaths, validate_three_paths
from .graph import Graph, bits, is_connected_mask, to_mask
from .oracle import InducedMinorModel

DEFAULT_BUDGET = 10**8


class _Counter:
    __slots__ = ("left", "budget")

    def __init__(self, budget: int):
        self.budget = budget
        self.left = budget

    def tick(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(self.budget)


# --- witnesses ----------------------------------------------------------------

@dataclass(frozen=True)
class TreeWitness:
    vertices: frozenset[int]
    terminals: tuple[int, int, int]

    def validate(self, g: Graph) -> None:
        mask = to_mask(self.vertices)
        if not set(self.terminals) <= self.vertices:
            raise ModelError("tree misses a terminal")
        if not is_connected_mask(g.adj, mask):
            raise ModelError("tree is not connected")
        edges = sum((g.adj[v] & mask).bit_count() for v in self.vertices) // 2
        if edges != len(self.vertices) - 1:
            raise ModelError("induced subgraph on the tree vertices has a cycle")
        leaves = {v for v in self.vertices if (g.adj[v] & mask).bit_count() <= 1}
        if len(self.vertices) > 1 and not leaves <= set(self.terminals):
            raise ModelError("tree is not inclusion-minimal: a leaf is not a terminal")


@dataclass(frozen=True)
class UnichordWitness:
    """A cycle of length >= 5 whose only chord is ``chord``."""

    kind = "long-unichord"
    cycle: tuple[int, ...]
    chord: tuple[int, int]

    def validate(self, g: Graph) -> None:
        c = self.cycle
        L = len(c)
        if L < 5 or len(set(c)) != L:
            raise ModelError("need a cycle on at least 5 distinct vertices")
        pos = {v: i for i, v in enumerate(c)}
        for i in range(L):
            if not g.has_edge(c[i], c[(i + 1) % L]):
                raise ModelError("cycle sequence is not a cycle")
        a, b = self.chord
        if a not in pos or b not in pos or (pos[a] - pos[b]) % L in (1, L - 1):
            raise ModelError("chord must join two non-consecutive cycle vertices")
        chords = set()
        for i in range(L):
            for j in range(i + 2, L):
                if (i, j) != (0, L - 1) and g.has_edge(c[i], c[j]):
                    chords.add(frozenset((c[i], c[j])))
        if chords != {frozenset(self.chord)}:
            raise ModelError(f"cycle has chords {sorted(map(sorted, chords))}, not exactly the given one")

    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def three_paths(self) -> ThreePaths:
        """The cycle with its chord read as an induced Gamma_{1,j,k}."""
        c = list(self.cycle)
        a, b = self.chord
        k = c.index(a)
        c = c[k:] + c[:k]
        j = c.index(b)
        one = tuple(c[: j + 1])
        two = tuple([a, *reversed(c[j + 1 :]), b])
        p, q = sorted((one, two), key=len)
        return ThreePaths(a, b, ((a, b), p, q))

    def to_model(self, g: Graph, house: Graph) -> InducedMinorModel:
        return _house_model_from_three_paths(g, house, self.three_paths())


@dataclass(frozen=True)
class ThetaWitness:
    """An induced long theta: hubs plus three paths, lengths >= 2, longest >= 3."""

    kind = "long-theta"
    paths: ThreePaths

    def validate(self, g: Graph) -> None:
        try:
            validate_three_paths(g, self.paths, vertex_set_is_whole_graph=False)
        except ParameterError as exc:
            raise ModelError(str(exc)) from None
        lengths = self.paths.lengths
        if min(lengths) < 2 or max(lengths) < 3:
            raise ModelError(f"path lengths {lengths} do not form a long theta")

    def vertices(self) -> frozenset[int]:
        return self.paths.vertices

    def to_model(self, g: Graph, house: Graph) -> InducedMinorModel:
        return _house_model_from_three_paths(g, house, self.paths)


def _house_model_from_three_paths(g: Graph, house: Graph, tp: ThreePaths) -> InducedMinorModel:
    """Model of the house (a,b,c,d,e; chord ad) in an induced Gamma_{i,j,k}, i>=1, j>=2, k>=3.

    The shortest path is folded into hub a (so a and d become adjacent), a
    second path's interior becomes e, and the longest path's interior is
    split into b (first vertex) and c (the rest).
    """
    p, q, r = sorted(tp.paths, key=len)
    if len(q) < 3 or len(r) < 4:
        raise ModelError("three-path graph is not a house subdivision")
    hub_a = {tp.a, *p[1:-1]}
    sets = [hub_a, {r[1]}, set(r[2:-1]), {tp.b}, set(q[1:-1])]
    return InducedMinorModel(house, g, tuple(frozenset(s) for s in sets))


# --- three-in-a-tree ----------------------------------------------------------

def _attach(adj: Sequence[int], region: int, path_mask: int, t: int) -> Optional[int]:
    """Vertices of an induced path from ``t`` to a vertex with exactly one
    neighbor on the path, all other path vertices having none."""
    hits = (adj[t] & path_mask).bit_count()
    if hits == 1:
        return 1 << t
    if hits > 1:
        return None
    free = region & ~path_mask
    parent = {t: -1}
    queue = [t]
    for x in queue:
        for y in bits(adj[x] & free):
            if y in parent:
                continue
            parent[y] = x
            c = (adj[y] & path_mask).bit_count()
            if c == 1:
                out = 0
                while y != -1:
                    out |= 1 << y
                    y = parent[y]
                return out
            if c == 0:
                queue.append(y)
    return None


def _three_in_a_tree(
    adj: Sequence[int], region: int, t1: int, t2: int, t3: int, counter: _Counter
) -> Optional[int]:
    """Enumerate induced t1,t2-paths in ``region``; close each with an attachment of t3."""
    target = 1 << t2
    t3bit = 1 << t3

    def reachable(src: int, allowed: int) -> bool:
        seen = 1 << src
        frontier = seen
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & allowed & ~seen
            if new & target:
                return True
            seen |= new
            frontier |= new
        return False

    def dfs(last: int, path_mask: int, blocked: int) -> Optional[int]:
        # blocked = closed neighborhood of the path minus its last vertex
        counter.tick()
        if last == t2:
            if path_mask & t3bit:
                return path_mask
            tail = _attach(adj, region, path_mask, t3)
            return None if tail is None else path_mask | tail
        if blocked & target:
            return None
        if not path_mask & t3bit and (adj[t3] & path_mask).bit_count() > 1:
            return None
        allowed = region & ~blocked & ~path_mask
        if not reachable(last, allowed):
            return None
        new_blocked = blocked | adj[last] | (1 << last)
        for x in bits(adj[last] & allowed):
            found = dfs(x, path_mask | 1 << x, new_blocked)
            if found is not None:
                return found
        return None

    if not region >> t1 & 1 or not region >> t2 & 1 or not region >> t3 & 1:
        return None
    return dfs(t1, 1 << t1, 0)


def three_in_a_tree(g: Graph, terminals: Sequence[int], budget: int = DEFAULT_BUDGET) -> Optional[TreeWitness]:
    """An inclusion-minimal induced tree containing the three terminals, or None."""
    ts = tuple(int(t) for t in terminals)
    if len(ts) != 3 or len(set(ts)) != 3 or any(not 0 <= t < g.n for t in ts):
        raise GraphInputError("three distinct terminals of the graph are required")
    found = _three_in_a_tree(g.adj, g.all_mask, *ts, _Counter(budget))
    if found is None:
        return None
    return TreeWitness(frozenset(bits(found)), ts)  # type: ignore[arg-type]


# --- long unichord ------------------------------------------------------------

def _bfs_path(adj: Sequence[int], sources: int, inner: int, sinks: int) -> Optional[list[int]]:
    """Shortest path from ``sources`` to ``sinks`` whose interior lies in ``inner``."""
    parent: dict[int, int] = {}
    queue = bits(sources)
    for s in queue:
        parent[s] = -1
    for x in queue:
        for y in bits(adj[x] & (inner | sinks)):
            if y in parent:
                continue
            parent[y] = x
            if sinks >> y & 1:
                out = []
                while y != -1:
                    out.append(y)
                    y = parent[y]
                return out[::-1]
            queue.append(y)
    return None


def _second_path(adj: Sequence[int], region: int, a: int, b: int, q_inner: int) -> Optional[list[int]]:
    """Interior of an induced a,b-path anticomplete to ``q_inner`` making a long cycle."""
    q_len = q_inner.bit_count() + 1
    nq = 0
    for v in bits(q_inner):
        nq |= adj[v]
    room = region & ~q_inner & ~nq & ~(1 << a) & ~(1 << b)
    if q_len >= 3:
        common = adj[a] & adj[b] & room
        if common:
            return [bits(common)[0]]
    sa = room & adj[a] & ~adj[b]
    sb = room & adj[b] & ~adj[a]
    inner = room & ~adj[a] & ~adj[b]
    return _bfs_path(adj, sa, inner, sb)


def find_long_unichord(g: Graph, budget: int = DEFAULT_BUDGET) -> Optional[UnichordWitness]:
    """Some edge ab that is the unique chord of a cycle of length >= 5.

    For every edge ab, induced a,b-paths Q (length >= 2, not using ab) are
    enumerated; for each, the other side is a shortest a,b-path through the
    vertices anticomplete to Q's interior, which is automatically induced.
    """
    adj = g.adj
    full = g.all_mask
    counter = _Counter(budget)

    for a, b in g.edges:
        bbit = 1 << b
        found: Optional[tuple[list[int], list[int]]] = None

        def dfs(path: list[int], blocked: int) -> bool:
            nonlocal found
            counter.tick()
            last = path[-1]
            if len(path) > 1 and adj[last] & bbit:
                q_inner = to_mask(path[1:])
                r = _second_path(adj, full, a, b, q_inner)
                if r is not None:
                    found = (path[1:], r)
                    return True
                return False
            pm = to_mask(path)
            for x in bits(adj[last] & full & ~blocked & ~pm & ~bbit):
                if len(path) == 1 or not adj[x] >> a & 1:
                    if dfs(path + [x], blocked | adj[last] | (1 << last)):
                        return True
            return False

        # first interior vertex: any neighbor of a other than b
        for q1 in bits(adj[a] & ~bbit):
            if dfs([a, q1], adj[a] | (1 << a)):
                break
        if found is not None:
            q_int, r_int = found
            cycle = (a, *q_int, b, *reversed(r_int))
            return UnichordWitness(cycle, (a, b))
    return None


# --- long theta ---------------------------------------------------------------

def _tree_paths(adj: Sequence[int], tree: int, center: int, leaf: int) -> list[int]:
    parent = {center: -1}
    queue = [center]
    for x in queue:
        for y in bits(adj[x] & tree):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    out = []
    y = leaf
    while y != -1:
        out.append(y)
        y = parent[y]
    return out  # leaf ... center


def find_long_theta(g: Graph, budget: int = DEFAULT_BUDGET) -> Optional[ThetaWitness]:
    """Induced Gamma_{i,j,k} with i, j >= 2 and k >= 3, via five-tuples and three-in-a-tree.

    Tuples (a, b, v1, v2, v3): a adjacent to b, v1, v2; b adjacent to v3;
    {v1, v2, v3} and {b, v1, v2} independent; a not adjacent to v3.  For
    every set X in which each v_i has exactly one neighbor, a and b have
    none, and every member sees some v_i, the graph G' keeps everything
    except a, b and the neighbors of a, b, v1, v2, v3 outside
    {v1, v2, v3} | X.  An induced tree of G' through v1, v2, v3 closes into
    a long theta with a and b.
    """
    adj = g.adj
    full = g.all_mask
    counter = _Counter(budget)
    tried: set[tuple[int, int, int, int]] = set()

    for a in range(g.n):
        na = adj[a]
        for b in bits(na):
            nb = adj[b]
            arms = bits(na & ~nb & ~(1 << b))
            tails = bits(nb & ~na & ~(1 << a))
            for i1, v1 in enumerate(arms):
                for v2 in arms[i1 + 1 :]:
                    if adj[v1] >> v2 & 1:
                        continue
                    for v3 in tails:
                        if adj[v3] & ((1 << v1) | (1 << v2)):
                            continue
                        vs = (v1, v2, v3)
                        vmask = to_mask(vs)
                        cand = full & ~(na | nb | (1 << a) | (1 << b)) & (adj[v1] | adj[v2] | adj[v3]) & ~vmask
                        xs_seen: set[int] = set()
                        for x1 in bits(cand & adj[v1]):
                            for x2 in bits(cand & adj[v2]):
                                for x3 in bits(cand & adj[v3]):
                                    xm = (1 << x1) | (1 << x2) | (1 << x3)
                                    if xm in xs_seen:
                                        continue
                                    xs_seen.add(xm)
                                    if any((adj[v] & xm).bit_count() != 1 for v in vs):
                                        continue
                                    gone = (na | nb | adj[v1] | adj[v2] | adj[v3]) & ~(vmask | xm)
                                    region = full & ~gone & ~(1 << a) & ~(1 << b)
                                    key = (region, v1, v2, v3)
                                    if key in tried:
                                        continue
                                    tried.add(key)
                                    tree = _three_in_a_tree(adj, region, v1, v2, v3, counter)
                                    if tree is not None:
                                        return _theta_from_tree(g, tree, a, b, vs)
    return None


def _theta_from_tree(g: Graph, tree: int, a: int, b: int, vs: tuple[int, int, int]) -> ThetaWitness:
    adj = g.adj
    centers = [v for v in bits(tree) if (adj[v] & tree).bit_count() == 3]
    if len(centers) != 1:
        raise ModelError("tree through the three arms is not a subdivided claw")
    c = centers[0]
    v1, v2, v3 = vs
    p1 = (a, *_tree_paths(adj, tree, c, v1))
    p2 = (a, *_tree_paths(adj, tree, c, v2))
    p3 = (a, b, *_tree_paths(adj, tree, c, v3))
    witness = ThetaWitness(ThreePaths(a, c, (p1, p2, p3)))
    witness.validate(g)
    return witness
