"""Edge-decks and degree-associated edge-decks as certificate-keyed multisets.

Deleting an edge keeps all vertices, so every card of a graph on n vertices
is itself a graph on n vertices with one edge fewer; isolated vertices are
first-class citizens here.  Keys are either plain certificates (edge-deck)
or (certificate, edge degree) pairs (da-edeck), which turns multiset
equality and containment into dictionary comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Certificate, Graph, GraphError, canonical_form, certificate_graph

__all__ = [
    "DaEcard",
    "Deck",
    "edge_deck",
    "da_edeck",
    "min_multiplicity",
    "sub_multiset",
    "intersection_size",
    "format_deck",
]


@dataclass(frozen=True, order=True)
class DaEcard:
    """An edge-card certificate together with the degree of the deleted edge."""

    card: Certificate
    d: int


class Deck:
    """Multiset of deck keys (Certificate or DaEcard) with multiplicities."""

    __slots__ = ("_entries",)

    def __init__(self, entries):
        items = dict(entries)
        for key, mult in items.items():
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"multiplicity for {key!r} must be a positive int")
        self._entries = items

    @property
    def total(self) -> int:
        return sum(self._entries.values())

    def mult(self, key) -> int:
        return self._entries.get(key, 0)

    def keys(self) -> list:
        return sorted(self._entries)

    def items(self) -> list:
        return sorted(self._entries.items())

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self.keys())

    def __contains__(self, key):
        return key in self._entries

    def __eq__(self, other):
        return isinstance(other, Deck) and self._entries == other._entries

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        inner = ", ".join(f"{k!r}: {m}" for k, m in self.items())
        return f"Deck({{{inner}}})"


def edge_deck(g: Graph) -> Deck:
    """Multiset of certificates of G - e over all edges e."""
    if g.m < 1:
        raise GraphError("edge-deck of an edgeless graph")
    entries: dict = {}
    for u, v in g.edges():
        cert = canonical_form(g.remove_edge(u, v))
        entries[cert] = entries.get(cert, 0) + 1
    return Deck(entries)


def da_edeck(g: Graph) -> Deck:
    """Multiset of (certificate of G - e, d(e)) pairs over all edges e."""
    if g.m < 1:
        raise GraphError("da-edeck of an edgeless graph")
    entries: dict = {}
    for u, v in g.edges():
        d = g.degree(u) + g.degree(v) - 2
        key = DaEcard(canonical_form(g.remove_edge(u, v)), d)
        entries[key] = entries.get(key, 0) + 1
    return Deck(entries)


def min_multiplicity(g: Graph) -> int:
    """Least multiplicity among the edge-card classes of g."""
    return min(m for _, m in edge_deck(g).items())


def sub_multiset(s: Deck, t: Deck) -> bool:
    """True iff s is contained in t with multiplicity."""
    return all(t.mult(key) >= m for key, m in s.items())


def intersection_size(s: Deck, t: Deck) -> int:
    """Size of the multiset intersection: sum of min multiplicities."""
    return sum(min(m, t.mult(key)) for key, m in s.items())


def _key_parts(key):
    if isinstance(key, DaEcard):
        return str(key.d), key.card.canon
    return "-", key.canon


def format_deck(deck: Deck) -> list:
    """One line per key: multiplicity, d (or '-'), graph6 of the card."""
    out = []
    for key, mult in deck.items():
        d, g6 = _key_parts(key)
        out.append(f"{mult} {d} {g6}")
    return out


def card_graph(key) -> Graph:
    """Canonical representative of a deck key's card."""
    cert = key.card if isinstance(key, DaEcard) else key
    return certificate_graph(cert)
