"""Blocker enumeration and the four reconstruction numbers.

A blocker for a collection of (da-)ecards of G is a graph H, not isomorphic
to G, whose own deck contains the collection.  Because cards keep all
vertices, any graph sharing a card C with G is C plus one edge, so scanning
single-edge extensions of the deck's cards enumerates every possible
blocker.  The minimum variants (ern, dern) find the smallest sub-multiset of
the deck contained in no blocker's deck; the adversary variants equal one
plus the largest overlap between G's deck and a blocker's.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .decks import (
    DaEcard,
    Deck,
    da_edeck,
    edge_deck,
    intersection_size,
    min_multiplicity,
    sub_multiset,
)
from .graphs import (
    Certificate,
    Graph,
    GraphError,
    canonical_form,
    canonical_graph,
    certificate_graph,
    components,
    is_isomorphic,
)

__all__ = [
    "ReconResult",
    "extensions",
    "determines",
    "blockers",
    "recon_number",
    "adv_recon_number",
    "is_tree_from_two_cards",
    "union_bound",
    "witness_deck",
]


@dataclass(frozen=True)
class ReconResult:
    """Outcome of a reconstruction-number computation.

    ``value`` is the number itself, or None when even the full deck lies in
    some blocker's deck (possible only below the four-edge threshold).  For
    the minimum variants the witness is the smallest unblocked sub-multiset,
    reported as (key, multiplicity) pairs; for the adversary variants it is
    the largest blocked sub-multiset, whose size is ``value - 1``.
    """

    value: int | None
    witness: tuple
    max_shared: int
    blocker_example: Graph | None

    @property
    def indeterminate(self) -> bool:
        return self.value is None


def witness_deck(witness) -> Deck:
    return Deck(dict(witness))


def extensions(card: Graph, d: int | None = None) -> list:
    """All graphs card+uv over non-adjacent pairs u,v, deduplicated by
    certificate; with d given, only pairs whose degrees sum to d, so the new
    edge has degree d in the extension."""
    found: dict = {}
    degs = card.degrees()
    for u, v in combinations(range(card.n), 2):
        if card.has_edge(u, v):
            continue
        if d is not None and degs[u] + degs[v] != d:
            continue
        h = card.add_edge(u, v)
        cert = canonical_form(h)
        if cert not in found:
            found[cert] = canonical_graph(h)
    return [found[c] for c in sorted(found)]


def determines(card: Graph, d: int, origin: Graph) -> bool:
    """Does the single da-ecard (card, d) pin down origin uniquely?

    Fast path: with d = 0, or with exactly one qualifying non-adjacent pair
    in the card, only one extension exists.  The condition is sufficient but
    not necessary, so the full extension scan decides the rest.
    """
    key = DaEcard(canonical_form(card), d)
    if key not in da_edeck(origin):
        raise GraphError("(card, d) is not a da-ecard of origin")
    degs = card.degrees()
    qualifying = [
        (u, v)
        for u, v in combinations(range(card.n), 2)
        if not card.has_edge(u, v) and degs[u] + degs[v] == d
    ]
    if d == 0 or len(qualifying) == 1:
        return True
    return all(is_isomorphic(h, origin) for h in extensions(card, d))


def _blocker_list(g: Graph, da: bool, deck: Deck) -> tuple:
    gcert = canonical_form(g)
    found: dict = {}
    for key in deck.keys():
        if da:
            card, d = certificate_graph(key.card), key.d
        else:
            card, d = certificate_graph(key), None
        for h in extensions(card, d):
            cert = canonical_form(h)
            if cert != gcert and cert not in found:
                found[cert] = h
    return tuple(found[c] for c in sorted(found))


def blockers(g: Graph, da: bool) -> list:
    """Every H (up to isomorphism, H != G) sharing at least one (da-)ecard
    with g.  Complete: a shared card C forces H = C plus one edge."""
    if g.m < 1:
        raise GraphError("blockers of an edgeless graph")
    return list(_context(g, da)[1])


@lru_cache(maxsize=1 << 16)
def _deck_of_cert(cert: Certificate, da: bool) -> Deck:
    g = certificate_graph(cert)
    return da_edeck(g) if da else edge_deck(g)


@lru_cache(maxsize=4096)
def _context(g: Graph, da: bool):
    deck = da_edeck(g) if da else edge_deck(g)
    blist = _blocker_list(g, da, deck)
    bdecks = tuple(_deck_of_cert(canonical_form(h), da) for h in blist)
    max_shared = 0
    example = None
    for h, bd in zip(blist, bdecks):
        shared = intersection_size(deck, bd)
        if shared > max_shared:
            max_shared, example = shared, h
    return deck, blist, bdecks, max_shared, example


def _witness_vectors(mults, k):
    """Sub-multiset size-k vectors over deck keys, in witness tie-break
    order: for each key try multiplicity 1, 2, .., then absence."""
    if k == 0:
        yield ()
        return
    if not mults:
        return
    head, rest = mults[0], mults[1:]
    room = sum(rest)
    for x in list(range(1, min(head, k) + 1)) + [0]:
        if k - x > room:
            continue
        for tail in _witness_vectors(rest, k - x):
            yield (x,) + tail


def recon_number(g: Graph, da: bool = False) -> ReconResult:
    """Smallest k such that some k-sub-multiset of the (da-)edeck of g is
    contained in no blocker's deck (ern for da=False, dern for da=True)."""
    if g.m < 1:
        raise GraphError("reconstruction number of an edgeless graph")
    deck, _blist, bdecks, max_shared, example = _context(g, da)
    if any(sub_multiset(deck, bd) for bd in bdecks):
        return ReconResult(None, (), max_shared, example)
    keys = deck.keys()
    mults = [deck.mult(key) for key in keys]
    for k in range(1, deck.total + 1):
        for vec in _witness_vectors(mults, k):
            chosen = [(key, x) for key, x in zip(keys, vec) if x]
            if not any(
                all(bd.mult(key) >= x for key, x in chosen) for bd in bdecks
            ):
                return ReconResult(k, tuple(chosen), max_shared, example)
    raise AssertionError("unreachable: full deck was not blocked")


def adv_recon_number(g: Graph, da: bool = False) -> ReconResult:
    """Least k such that every k-sub-multiset of the deck is unblocked:
    1 + the largest deck intersection with any blocker."""
    if g.m < 1:
        raise GraphError("reconstruction number of an edgeless graph")
    deck, blist, bdecks, max_shared, example = _context(g, da)
    if max_shared >= deck.total:
        return ReconResult(None, (), max_shared, example)
    witness = ()
    if example is not None:
        bd = bdecks[blist.index(example)]
        witness = tuple(
            (key, min(m, bd.mult(key)))
            for key, m in deck.items()
            if min(m, bd.mult(key)) > 0
        )
    return ReconResult(max_shared + 1, witness, max_shared, example)


def is_tree_from_two_cards(c1: Graph, c2: Graph) -> str:
    """"tree" when both cards split into exactly two tree components whose
    order pairs differ; "unknown" otherwise."""
    pairs = []
    for card in (c1, c2):
        comps = components(card)
        if len(comps) != 2 or any(c.m != c.n - 1 for c in comps):
            return "unknown"
        pairs.append(sorted(c.n for c in comps))
    return "tree" if pairs[0] != pairs[1] else "unknown"


def union_bound(g: Graph) -> tuple:
    """For g = kH (k >= 2 copies of connected H with at least two distinct
    edge-card classes): the bound min(adv_ern(H), 2 + mm(H)) and whether
    ern(g) stays below it."""
    comps = components(g)
    if len(comps) < 2:
        raise GraphError("need at least two components")
    certs = {canonical_form(c) for c in comps}
    if len(certs) != 1:
        raise GraphError("components are not all isomorphic")
    h = comps[0]
    if h.m < 1 or len(edge_deck(h)) == 1:
        raise GraphError("all edge-cards of the component are isomorphic")
    adv = adv_recon_number(h, da=False).value
    candidates = [2 + min_multiplicity(h)]
    if adv is not None:
        candidates.append(adv)
    bound = min(candidates)
    value = recon_number(g, da=False).value
    holds = value is not None and value <= bound
    return bound, holds
