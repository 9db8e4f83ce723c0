"""Polynomial-time recognizers with certificates, and the tame/feral classifier.

Every positive verdict carries a witness with an independent ``validate``
and a ``to_model`` that turns it into an induced minor model of the
pattern, so certificates can be checked twice: structurally and through the
generic model validator.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import CapabilityError, ModelError, ParameterError
from .generators import validate_twin_wheel
from .graph import Graph, bits, component_masks, named, open_nbhd_mask, to_mask
from .oracle import InducedMinorModel, SubdivisionEmbedding, contains_induced_subgraph, validate_embedding
from .subroutines import DEFAULT_BUDGET, ThetaWitness, UnichordWitness, find_long_theta, find_long_unichord

HOUSE = named("house")
BUTTERFLY = named("butterfly")
DIAMOND = named("diamond")
TWO_P2 = named("2P2")


@dataclass(frozen=True)
class TwinWheelWitness:
    """Hole (cyclic order) plus a center seeing hole[0], hole[1], hole[2]."""

    kind = "twin-wheel"
    hole: tuple[int, ...]
    center: int

    def validate(self, g: Graph) -> None:
        try:
            validate_twin_wheel(g, self.hole, self.center, induced_only=True)
        except ParameterError as exc:
            raise ModelError(str(exc)) from None

    def vertices(self) -> frozenset[int]:
        return frozenset((*self.hole, self.center))

    def to_model(self, g: Graph, house: Graph = HOUSE) -> InducedMinorModel:
        # Contract hole[0]hole[1] and the run hole[3..L-2]; the center, the
        # merged pair and hole[2] form the triangle, the rest the square.
        h = self.hole
        a = {h[0], h[1]}
        d = {h[2]}
        e = {self.center}
        c = set(h[3:-1])
        b = {h[-1]}
        return InducedMinorModel(house, g, tuple(frozenset(s) for s in (a, b, c, d, e)))


@dataclass(frozen=True)
class ButterflyWitness:
    """A 2P2 on ``x`` (edges x[0]x[1], x[2]x[3]) and a component of G - X seeing all of X."""

    kind = "butterfly-im"
    x: tuple[int, int, int, int]
    component: frozenset[int]

    def validate(self, g: Graph) -> None:
        xm = to_mask(self.x)
        if xm.bit_count() != 4:
            raise ModelError("X must have four distinct vertices")
        validate_embedding(g, TWO_P2, self.x)
        cm = to_mask(self.component)
        if cm not in component_masks(g.adj, g.all_mask & ~xm):
            raise ModelError("C is not a connected component of G - X")
        nb = open_nbhd_mask(g.adj, cm)
        if xm & ~nb:
            raise ModelError("some vertex of X has no neighbor in C")

    def vertices(self) -> frozenset[int]:
        return frozenset(self.x) | self.component

    def to_model(self, g: Graph, butterfly: Graph = BUTTERFLY) -> InducedMinorModel:
        sets = [frozenset({v}) for v in self.x] + [self.component]
        return InducedMinorModel(butterfly, g, tuple(sets))


@dataclass(frozen=True)
class InducedSubgraphWitness:
    kind = "induced-subgraph"
    pattern: Graph
    embedding: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        validate_embedding(g, self.pattern, self.embedding)

    def vertices(self) -> frozenset[int]:
        return frozenset(self.embedding)

    def to_model(self, g: Graph, pattern: Optional[Graph] = None) -> InducedMinorModel:
        return InducedMinorModel(self.pattern, g, tuple(frozenset({v}) for v in self.embedding))


Witness = Union[UnichordWitness, ThetaWitness, TwinWheelWitness, ButterflyWitness, InducedSubgraphWitness, SubdivisionEmbedding]


@dataclass(frozen=True)
class Verdict:
    present: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.present


def witness_vertices(w: Witness) -> frozenset[int]:
    if isinstance(w, SubdivisionEmbedding):
        return frozenset(w.embedding)
    return w.vertices()


def validate_witness(g: Graph, w: Witness) -> None:
    if isinstance(w, SubdivisionEmbedding):
        w.validate()
    else:
        w.validate(g)


def witness_model(g: Graph, w: Witness) -> InducedMinorModel:
    """The witness as an induced minor model of the pattern it certifies."""
    if isinstance(w, SubdivisionEmbedding):
        return w.to_model()
    if isinstance(w, (UnichordWitness, ThetaWitness, TwinWheelWitness)):
        return w.to_model(g, HOUSE)
    if isinstance(w, ButterflyWitness):
        return w.to_model(g, BUTTERFLY)
    return w.to_model(g)


# --- recognizers --------------------------------------------------------------

def has_house_itm(g: Graph, budget: int = DEFAULT_BUDGET) -> Verdict:
    """House as induced topological minor: a long unichord or an induced long theta."""
    w: Optional[Witness] = find_long_unichord(g, budget)
    if w is None:
        w = find_long_theta(g, budget)
    return Verdict(w is not None, w)


def _shortest_path(adj, src: int, dst: int, allowed: int) -> Optional[list[int]]:
    parent = {src: -1}
    queue = [src]
    for x in queue:
        for y in bits(adj[x] & (allowed | 1 << dst)):
            if y in parent:
                continue
            parent[y] = x
            if y == dst:
                out = []
                while y != -1:
                    out.append(y)
                    y = parent[y]
                return out[::-1]
            queue.append(y)
    return None


def has_long_twin_wheel(g: Graph) -> Optional[TwinWheelWitness]:
    """Induced long twin wheel via diamonds (a, b, c, d) with a, d nonadjacent.

    Look for an a,d-path avoiding (N[b] | N[c]) - {a, d} and every common
    neighbor of a and d; a shortest one, closed through c, is the hole and b
    is the center.
    """
    adj = g.adj
    full = g.all_mask
    for b, c in g.edges:
        common = adj[b] & adj[c]
        ends = bits(common)
        for i, a in enumerate(ends):
            for d in ends[i + 1 :]:
                if adj[a] >> d & 1:
                    continue
                removed = (adj[b] | adj[c] | 1 << b | 1 << c) & ~(1 << a | 1 << d)
                removed |= adj[a] & adj[d]
                p = _shortest_path(adj, a, d, full & ~removed)
                if p is None:
                    continue
                # hole: a, c, d, then back to a along p
                hole = (a, c, d, *reversed(p[1:-1]))
                w = TwinWheelWitness(hole, b)
                w.validate(g)
                return w
    return None


def has_house_im(g: Graph, budget: int = DEFAULT_BUDGET) -> Verdict:
    """House as induced minor: an induced house subdivision or an induced long twin wheel."""
    itm = has_house_itm(g, budget)
    if itm:
        return itm
    w = has_long_twin_wheel(g)
    return Verdict(w is not None, w)


def _two_p2_sets(g: Graph):
    edges = g.edges
    adj = g.adj
    for i, (u1, v1) in enumerate(edges):
        e1 = 1 << u1 | 1 << v1
        for u2, v2 in edges[i + 1 :]:
            e2 = 1 << u2 | 1 << v2
            if e1 & e2 or (adj[u1] | adj[v1]) & e2:
                continue
            yield (u1, v1, u2, v2)


def has_butterfly_im(g: Graph) -> Verdict:
    """Some 2P2 X and a component of G - X in which every vertex of X has a neighbor."""
    adj = g.adj
    for x in _two_p2_sets(g):
        xm = to_mask(x)
        for comp in component_masks(adj, g.all_mask & ~xm):
            if not xm & ~open_nbhd_mask(adj, comp):
                return Verdict(True, ButterflyWitness(x, frozenset(bits(comp))))
    return Verdict(False)


def has_2p2_itm(g: Graph) -> Verdict:
    """2P2 as induced topological minor, i.e. as induced subgraph."""
    for x in _two_p2_sets(g):
        return Verdict(True, InducedSubgraphWitness(TWO_P2, x))
    return Verdict(False)


RECOGNIZERS = {
    "house-im": has_house_im,
    "house-itm": has_house_itm,
    "butterfly-im": lambda g, budget=DEFAULT_BUDGET: has_butterfly_im(g),
    "2p2-itm": lambda g, budget=DEFAULT_BUDGET: has_2p2_itm(g),
}


# --- dichotomy ----------------------------------------------------------------

INDUCED_MINOR = "induced-minor"
INDUCED_TOPOLOGICAL_MINOR = "induced-topological-minor"

MAXIMAL_TAME = {
    INDUCED_MINOR: (("diamond", DIAMOND), ("butterfly", BUTTERFLY), ("house", HOUSE)),
    INDUCED_TOPOLOGICAL_MINOR: (("2P2", TWO_P2), ("diamond", DIAMOND), ("house", HOUSE)),
}


@dataclass(frozen=True)
class DichotomyVerdict:
    pattern: Graph
    relation: str
    verdict: str
    justification: Optional[str]

    @property
    def tame(self) -> bool:
        return self.verdict == "tame"


def classify_dichotomy(h: Graph, relation: str) -> DichotomyVerdict:
    """Tame iff ``h`` is an induced subgraph of one of the maximal tame patterns.

    Induced minors: diamond, butterfly, house.  Induced topological minors:
    2P2, diamond, house.  The justification names the first pattern found.
    """
    if relation not in MAXIMAL_TAME:
        raise ValueError(f"relation must be one of {sorted(MAXIMAL_TAME)}")
    if h.n > 12:
        raise CapabilityError("dichotomy classification capped at 12 pattern vertices")
    for name, big in MAXIMAL_TAME[relation]:
        if contains_induced_subgraph(big, h) is not None:
            return DichotomyVerdict(h, relation, "tame", name)
    return DichotomyVerdict(h, relation, "feral", None)
