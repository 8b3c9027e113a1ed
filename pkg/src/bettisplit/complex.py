"""Simplicial complexes given by their facets.

Facets are bitsets over ``vertices``.  The facet tuple keeps input order
(leaf search scans it in that order); construction drops duplicates and any
set contained in another one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError, ResourceError
from .graph import Graph, iter_bits, popcount

log = logging.getLogger(__name__)

DEFAULT_FACET_CAP = 18


def maximal_sets(masks: Sequence[int]) -> tuple[list[int], int]:
    """Keep the inclusion-maximal sets (first occurrence wins); return (kept, dropped)."""
    kept = []
    seen = set()
    for i, m in enumerate(masks):
        if m in seen:
            continue
        if any(m != o and m & o == m for o in masks):
            continue
        seen.add(m)
        kept.append(m)
    return kept, len(masks) - len(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[str, ...]
    facets: tuple[int, ...]
    dropped: int = field(default=0, compare=False)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex names")
        full = (1 << len(self.vertices)) - 1
        for f in self.facets:
            if f == 0:
                raise InputError("empty facet")
            if f & ~full:
                raise InputError("facet uses an undeclared vertex")
        for a, b in combinations(self.facets, 2):
            if a & b in (a, b):
                raise InputError("facets must be pairwise incomparable")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[str]], vertices: Iterable[str] = ()):
        """Build from name lists; dominated and repeated sets are discarded with a warning."""
        order: dict[str, int] = {}
        for v in vertices:
            order.setdefault(str(v), len(order))
        masks = []
        for f in facets:
            names = sorted({str(x) for x in f})
            if not names:
                raise InputError("empty facet")
            m = 0
            for x in names:
                m |= 1 << order.setdefault(x, len(order))
            masks.append(m)
        kept, dropped = maximal_sets(masks)
        if dropped:
            log.warning("dropped %d non-maximal or repeated facet(s)", dropped)
        return cls(tuple(order), tuple(kept), dropped)

    @classmethod
    def from_graph(cls, G: Graph) -> "SimplicialComplex":
        """The 1-dimensional complex whose facets are the edges of G (isolated vertices dropped)."""
        return cls(G.vertices, tuple(G.edge_masks()))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def mask_of(self, names: Iterable[str]) -> int:
        m = 0
        for v in names:
            try:
                m |= 1 << self.index[v]
            except KeyError:
                raise InputError(f"unknown vertex {v!r}") from None
        return m

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in iter_bits(mask))

    def facet_names(self) -> list[tuple[str, ...]]:
        return [self.names_of(f) for f in self.facets]

    @property
    def key(self) -> frozenset:
        """Name-based identity of the facet set (vertex order and isolated vertices ignored)."""
        return frozenset(frozenset(self.names_of(f)) for f in self.facets)

    def __len__(self):
        return len(self.facets)

    def facet_mask(self, F) -> int:
        m = F if isinstance(F, int) else self.mask_of(F)
        if m not in self.facets:
            raise InputError(f"{sorted(self.names_of(m))} is not a facet")
        return m

    def _with_facets(self, masks: Iterable[int], trim=False) -> "SimplicialComplex":
        masks = tuple(masks)
        if not trim:
            return SimplicialComplex(self.vertices, masks)
        used = 0
        for m in masks:
            used |= m
        keep = list(iter_bits(used))
        pos = {old: new for new, old in enumerate(keep)}
        remap = []
        for m in masks:
            r = 0
            for i in iter_bits(m):
                r |= 1 << pos[i]
            remap.append(r)
        return SimplicialComplex(tuple(self.vertices[i] for i in keep), tuple(remap))

    def __str__(self):
        inner = ", ".join("{" + ",".join(f) + "}" for f in self.facet_names())
        return f"<{inner}>"


def remove_facet(D: SimplicialComplex, F) -> SimplicialComplex:
    m = D.facet_mask(F)
    return D._with_facets(f for f in D.facets if f != m)


def _component_bits(facets: Sequence[int], start: int) -> int:
    """Bitmask over facet positions reachable from ``start`` by intersecting chains."""
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            for k, g in enumerate(facets):
                if facets[i] & g:
                    nxt |= 1 << k
        frontier = nxt & ~comp
        comp |= frontier
    return comp


def conn_component_of_facet(D: SimplicialComplex, F) -> SimplicialComplex:
    m = D.facet_mask(F)
    bits = _component_bits(D.facets, D.facets.index(m))
    return D._with_facets(f for k, f in enumerate(D.facets) if bits >> k & 1)


def omega(D: SimplicialComplex, F) -> SimplicialComplex:
    """Facets outside the connected component of F."""
    m = D.facet_mask(F)
    bits = _component_bits(D.facets, D.facets.index(m))
    return D._with_facets(f for k, f in enumerate(D.facets) if not bits >> k & 1)


def reduced_conn(D: SimplicialComplex, F) -> SimplicialComplex:
    """Minimal nonempty differences G \\ F over the other facets G of F's component.

    The result lives on the vertices it actually covers; vertices left alone
    by the subtraction become singleton facets.
    """
    m = D.facet_mask(F)
    comp = conn_component_of_facet(D, m)
    diffs = []
    for g in comp.facets:
        if g == m:
            continue
        d = g & ~m
        if not d:
            raise PreconditionError("facet contained in another facet", witness=D.names_of(g))
        diffs.append(d)
    kept = [d for d in dict.fromkeys(diffs) if not any(o != d and o & d == o for o in diffs)]
    return D._with_facets(kept, trim=True)


def components(D: SimplicialComplex) -> list[SimplicialComplex]:
    out, seen = [], 0
    for k in range(len(D.facets)):
        if seen >> k & 1:
            continue
        bits = _component_bits(D.facets, k)
        seen |= bits
        out.append(D._with_facets(f for i, f in enumerate(D.facets) if bits >> i & 1))
    return out


def _is_leaf_among(facets: Sequence[int], k: int) -> bool:
    F = facets[k]
    others = [g for i, g in enumerate(facets) if i != k]
    if not others:
        return True
    traces = [F & g for g in others]
    return any(all(t & ~(F & g) == 0 for t in traces) for g in others)


def is_leaf(D: SimplicialComplex, F) -> bool:
    m = D.facet_mask(F)
    return _is_leaf_among(D.facets, D.facets.index(m))


def find_leaf(D: SimplicialComplex):
    """First leaf in facet order, as a mask, or None."""
    for k, f in enumerate(D.facets):
        if _is_leaf_among(D.facets, k):
            return f
    return None


def find_leafless_subcomplex(D: SimplicialComplex, facet_cap: int = DEFAULT_FACET_CAP):
    """A nonempty connected subcomplex without a leaf, or None if D is a forest.

    Exhaustive over facet subsets; subsets are visited by increasing bitmask
    so connectivity of each subset is derived from a smaller one.
    """
    q = len(D.facets)
    if q > facet_cap:
        raise ResourceError(
            f"forest check enumerates facet subsets and is capped at {facet_cap} facets "
            f"(complex has {q}); raise --facet-cap to override"
        )
    meets = [0] * q
    for i in range(q):
        for k in range(q):
            if i != k and D.facets[i] & D.facets[k]:
                meets[i] |= 1 << k
    for sub in range(1, 1 << q):
        # connectivity by flood fill inside the subset
        start = sub & -sub
        comp = frontier = start
        while frontier:
            nxt = 0
            for i in iter_bits(frontier):
                nxt |= meets[i]
            frontier = nxt & sub & ~comp
            comp |= frontier
        if comp != sub:
            continue
        members = [D.facets[i] for i in iter_bits(sub)]
        if not any(_is_leaf_among(members, k) for k in range(len(members))):
            return D._with_facets(members)
    return None


def is_simplicial_forest(D: SimplicialComplex, facet_cap: int = DEFAULT_FACET_CAP) -> bool:
    return find_leafless_subcomplex(D, facet_cap) is None


def pure_dimension(D: SimplicialComplex) -> int | None:
    """Common facet size d (so the complex is pure (d-1)-dimensional), or None."""
    sizes = {popcount(f) for f in D.facets}
    return sizes.pop() if len(sizes) == 1 else None


def codim1_faces(D: SimplicialComplex) -> list[int]:
    d = pure_dimension(D)
    if d is None:
        raise PreconditionError("complex is not pure")
    faces = {}
    for f in D.facets:
        for i in iter_bits(f):
            faces.setdefault(f & ~(1 << i), None)
    return sorted(faces, key=lambda m: (popcount(m), [i for i in iter_bits(m)]))


def face_degree(D: SimplicialComplex, G) -> int:
    d = pure_dimension(D)
    if d is None:
        raise PreconditionError("face degree needs a pure complex")
    m = G if isinstance(G, int) else D.mask_of(G)
    if popcount(m) != d - 1:
        raise PreconditionError(f"face must have {d - 1} vertices")
    return sum(1 for f in D.facets if f & m == m)
