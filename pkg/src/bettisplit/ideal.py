"""Squarefree monomial ideals kept as minimal generating sets.

A squarefree monomial is its support, a bitset over the ideal's ``ambient``
variable names; lcm is bitwise or and divisibility is subset inclusion.
Ideals built over different ambients are re-embedded into the union of the
two name lists before combining.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .complex import SimplicialComplex
from .graph import Graph, iter_bits, popcount


def _canonical(gens: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(gens), key=lambda m: (popcount(m), list(iter_bits(m)))))


def minimal_masks(gens: Iterable[int]) -> tuple[int, ...]:
    """Drop every monomial divisible by another one; the result is order independent."""
    gens = sorted(set(gens), key=popcount)
    kept: list[int] = []
    for g in gens:
        if not any(k & g == k for k in kept):
            kept.append(g)
    return _canonical(kept)


@dataclass(frozen=True, eq=False)
class MonomialIdeal:
    ambient: tuple[str, ...]
    gens: tuple[int, ...]

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[str]], ambient: Iterable[str] = ()):
        order: dict[str, int] = {}
        for v in ambient:
            order.setdefault(v, len(order))
        masks = []
        for s in supports:
            m = 0
            for v in s:
                m |= 1 << order.setdefault(v, len(order))
            masks.append(m)
        return minimalize(masks, tuple(order))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def __len__(self):
        return len(self.gens)

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.ambient[i] for i in iter_bits(mask))

    def mask_of(self, names: Iterable[str]) -> int:
        pos = {v: i for i, v in enumerate(self.ambient)}
        m = 0
        for v in names:
            m |= 1 << pos[v]
        return m

    def supports(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(self.names_of(g)) for g in self.gens)

    def support_mask(self) -> int:
        m = 0
        for g in self.gens:
            m |= g
        return m

    def degrees(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for g in self.gens:
            d = popcount(g)
            out[d] = out.get(d, 0) + 1
        return out

    def contains(self, names: Iterable[str]) -> bool:
        """Membership of the squarefree monomial with the given support."""
        names = set(names)
        return any(set(self.names_of(g)) <= names for g in self.gens)

    def embed(self, ambient: tuple[str, ...]) -> "MonomialIdeal":
        pos = {v: i for i, v in enumerate(ambient)}
        remap = [pos[v] for v in self.ambient]
        out = []
        for g in self.gens:
            m = 0
            for i in iter_bits(g):
                m |= 1 << remap[i]
            out.append(m)
        return MonomialIdeal(ambient, _canonical(out))

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.supports() == other.supports()

    def __hash__(self):
        return hash(self.supports())

    def __repr__(self):
        return f"MonomialIdeal({', '.join(self.render_terms()) or '0'})"

    def render_terms(self) -> list[str]:
        return ["*".join(self.names_of(g)) for g in self.gens]

    def render(self) -> str:
        return "\n".join(self.render_terms()) if self.gens else "0"

    def to_json(self) -> str:
        return json.dumps([list(self.names_of(g)) for g in self.gens])


def _common_ambient(*ideals: MonomialIdeal) -> tuple[str, ...]:
    order: dict[str, None] = {}
    for I in ideals:
        for v in I.ambient:
            order.setdefault(v, None)
    return tuple(order)


def minimalize(gens: Iterable[int], ambient: Iterable[str]) -> MonomialIdeal:
    return MonomialIdeal(tuple(ambient), minimal_masks(gens))


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal(G.vertices, _canonical(G.edge_masks()))


def facet_ideal(D: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal(D.vertices, _canonical(D.facets))


def intersect(J: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    amb = _common_ambient(J, K)
    J, K = J.embed(amb), K.embed(amb)
    return minimalize((g | h for g in J.gens for h in K.gens), amb)


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    amb = _common_ambient(I, J)
    return minimalize(I.embed(amb).gens + J.embed(amb).gens, amb)


def scale(I: MonomialIdeal, m: Iterable[str]) -> MonomialIdeal:
    """Multiply every generator by the squarefree monomial with support ``m``."""
    names = tuple(m)
    amb = _common_ambient(I, MonomialIdeal(names, ()))
    I = I.embed(amb)
    mm = I.mask_of(names)
    return minimalize((g | mm for g in I.gens), amb)


def principal(names: Iterable[str], ambient: Iterable[str] = ()) -> MonomialIdeal:
    return MonomialIdeal.from_supports([tuple(names)], ambient)


def variables(names: Iterable[str]) -> MonomialIdeal:
    return MonomialIdeal.from_supports([(v,) for v in names])
