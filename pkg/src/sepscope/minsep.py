"""Minimal separators: membership test, enumeration, counting.

A set S is a minimal separator iff G - S has at least two full components
(components C with S contained in N(C)).  Enumeration is the classical
closure scheme: seed with N(C) for every component C of G - N[v], then for
every separator S and x in S add N(C) for every component C of
G - (S | N(x)), until nothing new appears.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Optional

from .errors import GraphInputError, SeparatorOverflow
from .graph import Graph, bits, component_masks, open_nbhd_mask, to_mask


@dataclass(frozen=True)
class SeparatorReport:
    graph: Graph
    separators: tuple[frozenset[int], ...]
    evidence: dict[frozenset[int], tuple[frozenset[int], frozenset[int]]] = field(repr=False)

    @property
    def count(self) -> int:
        return len(self.separators)


@dataclass(frozen=True)
class SeparatorCount:
    count: int
    exceeded: bool


def _full_components(adj, full: int, s: int) -> list[int]:
    return [c for c in component_masks(adj, full & ~s) if open_nbhd_mask(adj, c) == s]


def _check(g: Graph, s: Iterable[int]) -> int:
    mask = to_mask(s)
    if mask & ~g.all_mask:
        raise GraphInputError("separator candidate has vertices outside the graph")
    return mask


def separator_evidence(g: Graph, s: Iterable[int]) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two full components of G - S, or None when S is not a minimal separator."""
    full = _full_components(g.adj, g.all_mask, _check(g, s))
    if len(full) < 2:
        return None
    return frozenset(bits(full[0])), frozenset(bits(full[1]))


def is_minimal_separator(g: Graph, s: Iterable[int]) -> bool:
    return separator_evidence(g, s) is not None


def _closure(g: Graph, cap: Optional[int]) -> set[int]:
    adj, full = g.adj, g.all_mask
    found: set[int] = set()
    queue: list[int] = []

    def harvest(removed: int) -> None:
        for comp in component_masks(adj, full & ~removed):
            s = open_nbhd_mask(adj, comp)
            if s not in found:
                if cap is not None and len(found) >= cap:
                    raise SeparatorOverflow(cap, len(found) + 1)
                found.add(s)
                queue.append(s)

    for v in range(g.n):
        harvest(adj[v] | 1 << v)
    while queue:
        s = queue.pop()
        for x in bits(s):
            harvest(s | adj[x])
    # N(C) for a component of G - N[v] is always a minimal separator, and the
    # substitution step preserves that; the filter only guards the invariant.
    return {s for s in found if len(_full_components(adj, full, s)) >= 2}


def _order_key(s: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


def enumerate_minimal_separators(g: Graph, cap: Optional[int] = None) -> SeparatorReport:
    """All minimal separators, sorted by their sorted member lists, with evidence.

    Raises ``SeparatorOverflow`` (carrying the partial count) when more than
    ``cap`` separators exist.
    """
    masks = _closure(g, cap)
    seps = sorted((frozenset(bits(s)) for s in masks), key=_order_key)
    evidence = {}
    for s in seps:
        c1, c2 = _full_components(g.adj, g.all_mask, to_mask(s))[:2]
        evidence[s] = (frozenset(bits(c1)), frozenset(bits(c2)))
    return SeparatorReport(g, tuple(seps), evidence)


def count_minimal_separators(g: Graph, cap: Optional[int] = None) -> SeparatorCount:
    """Exact count, or ``count = cap + 1, exceeded = True`` once the cap is passed."""
    if cap is not None and cap < 0:
        raise ValueError("cap must be non-negative")
    try:
        return SeparatorCount(len(_closure(g, cap)), False)
    except SeparatorOverflow as exc:
        return SeparatorCount(exc.partial_count, True)


def minimal_separators_by_definition(g: Graph) -> set[frozenset[int]]:
    """Reference filter straight from the definition, over all 2^n subsets.

    S qualifies when some nonadjacent pair a, b outside S lies in distinct
    components of G - S while every strict subset of S leaves them
    connected.  Pair sets are bitmasks over vertex pairs; the union over
    strict subsets is accumulated by subset dynamic programming.  Intended
    for n <= 12.
    """
    n = g.n
    adj = g.adj
    pair_index = {}
    for a in range(n):
        for b in range(a + 1, n):
            if not g.has_edge(a, b):
                pair_index[a, b] = len(pair_index)
    separated = [0] * (1 << n)
    for s in range(1 << n):
        comp_of = {}
        for idx, comp in enumerate(component_masks(adj, g.all_mask & ~s)):
            for v in bits(comp):
                comp_of[v] = idx
        pairs = 0
        for (a, b), k in pair_index.items():
            if a in comp_of and b in comp_of and comp_of[a] != comp_of[b]:
                pairs |= 1 << k
        separated[s] = pairs
    below = [0] * (1 << n)  # pairs separated by some strict subset
    out = set()
    for s in range(1 << n):
        acc = 0
        for x in bits(s):
            t = s & ~(1 << x)
            acc |= separated[t] | below[t]
        below[s] = acc
        if separated[s] & ~acc:
            out.add(frozenset(bits(s)))
    return out
