"""Brute-force references used by several test modules."""
from __future__ import annotations

import itertools

from sepscope.graph import Graph, bits, component_masks, is_connected_mask


def induced_tree_masks(g: Graph) -> list[int]:
    out = []
    for mask in range(1, 1 << g.n):
        k = mask.bit_count()
        edges = sum((g.adj[v] & mask).bit_count() for v in bits(mask)) // 2
        if edges == k - 1 and is_connected_mask(g.adj, mask):
            out.append(mask)
    return out


def tree_triples(g: Graph) -> dict[tuple[int, int, int], bool]:
    trees = induced_tree_masks(g)
    return {
        t: any(m & (1 << t[0] | 1 << t[1] | 1 << t[2]) == (1 << t[0] | 1 << t[1] | 1 << t[2]) for m in trees)
        for t in itertools.combinations(range(g.n), 3)
    }


def _gamma_shape(g: Graph, mask: int) -> tuple[int, int] | None:
    """(hub0, hub1) when G[mask] is two degree-3 hubs joined by three paths."""
    vs = bits(mask)
    deg = {v: (g.adj[v] & mask).bit_count() for v in vs}
    hubs = [v for v in vs if deg[v] == 3]
    if len(hubs) != 2 or any(deg[v] != 2 for v in vs if v not in hubs):
        return None
    if not is_connected_mask(g.adj, mask):
        return None
    rest = mask & ~(1 << hubs[0])
    edges = sum((g.adj[v] & rest).bit_count() for v in bits(rest)) // 2
    if edges != rest.bit_count() - len(component_masks(g.adj, rest)):
        return None  # two cycles hanging off a path, not three paths
    return hubs[0], hubs[1]


def has_induced_long_unichord(g: Graph) -> bool:
    for mask in range(1 << g.n):
        if mask.bit_count() >= 5:
            hubs = _gamma_shape(g, mask)
            if hubs and g.has_edge(*hubs):
                return True
    return False


def has_induced_long_theta(g: Graph) -> bool:
    for mask in range(1 << g.n):
        if mask.bit_count() >= 6:
            hubs = _gamma_shape(g, mask)
            if hubs and not g.has_edge(*hubs):
                return True
    return False
