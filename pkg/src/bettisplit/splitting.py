"""Splitting edges, vertices and facets, and a checker for splitting functions.

An ideal I = J + K splits when G(I) is the disjoint union of G(J) and G(K)
and some map w -> (phi(w), psi(w)) on G(J cap K) has lcm(phi(w), psi(w)) = w
and, for every nonempty subset S, lcm(phi(S)) and lcm(psi(S)) both strictly
divide lcm(S).  The builders below produce the explicit maps used in the
classification proofs; :func:`verify_splitting` checks any such map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import ideal as ideals
from .complex import (
    SimplicialComplex,
    is_leaf,
    omega,
    reduced_conn,
    remove_facet,
)
from .errors import InputError, PreconditionError
from .graph import Graph, delete_edge, delete_vertices, iter_bits, neighbors, popcount
from .ideal import MonomialIdeal

DEFAULT_SUBSET_CAP = 20


@dataclass(frozen=True)
class EdgeSplit:
    edge: tuple[str, str]
    dominated: str  # endpoint u with N(u) inside N(v) + {v}
    n: int
    H: Graph
    G_minus_e: Graph
    G: Graph


@dataclass(frozen=True)
class VertexSplit:
    vertex: str
    neighbors: tuple[str, ...]
    G_minus_v: Graph
    G_of_v: Graph
    G_i: tuple[Graph, ...]
    L: MonomialIdeal
    G: Graph


@dataclass(frozen=True)
class FacetSplit:
    facet: tuple[str, ...]
    D_minus_F: SimplicialComplex
    conn_bar: SimplicialComplex
    omega: SimplicialComplex
    D: SimplicialComplex


def _dominated_endpoints(G: Graph, e) -> list[str]:
    u, v = e
    G.edge_mask(e)
    out = []
    if neighbors(G, u) <= neighbors(G, v) | {v}:
        out.append(u)
    if neighbors(G, v) <= neighbors(G, u) | {u}:
        out.append(v)
    return out


def is_splitting_edge(G: Graph, e) -> bool:
    return bool(_dominated_endpoints(G, e))


def make_edge_split(G: Graph, e) -> EdgeSplit:
    u, v = e
    dom = _dominated_endpoints(G, e)
    if not dom:
        extra_u = sorted(neighbors(G, u) - neighbors(G, v) - {v})
        extra_v = sorted(neighbors(G, v) - neighbors(G, u) - {u})
        raise PreconditionError(
            f"{u}{v} is not a splitting edge: N({u}) has {extra_u} outside N({v})+{v} "
            f"and N({v}) has {extra_v} outside N({u})+{u}",
            witness=(extra_u, extra_v),
        )
    closed = neighbors(G, u) | neighbors(G, v)
    return EdgeSplit(
        edge=(u, v),
        dominated=dom[0],
        n=len(closed) - 2,
        H=delete_vertices(G, closed),
        G_minus_e=delete_edge(G, e),
        G=G,
    )


def _sorted_neighbors(G: Graph, v: str) -> tuple[str, ...]:
    return G.names_of(G.adj[G.idx(v)])


def is_splitting_vertex(G: Graph, v: str) -> bool:
    i = G.idx(v)
    if not G.adj[i]:
        return False
    return delete_vertices(G, [v]).num_edges > 0


def make_vertex_split(G: Graph, v: str) -> VertexSplit:
    if not is_splitting_vertex(G, v):
        raise PreconditionError(
            f"{v} is not a splitting vertex (isolated, or the center of a star K1,d)"
        )
    nbrs = _sorted_neighbors(G, v)
    nv = set(nbrs)
    G_i = tuple(delete_vertices(G, nv | neighbors(G, w)) for w in nbrs)
    gv_edges = [
        (a, b) for a, b in G.edges()
        if v not in (a, b) and (a in nv or b in nv)
    ]
    G_of_v = Graph.from_edges(gv_edges, [w for w in G.vertices if w in nv])
    parts = ideals.scale(ideals.edge_ideal(G_of_v), [v])
    for w, Gw in zip(nbrs, G_i):
        parts = ideals.add(parts, ideals.scale(ideals.edge_ideal(Gw), [v, w]))
    L = parts.embed(G.vertices)
    return VertexSplit(
        vertex=v,
        neighbors=nbrs,
        G_minus_v=delete_vertices(G, [v]),
        G_of_v=G_of_v,
        G_i=G_i,
        L=L,
        G=G,
    )


def is_splitting_facet(D: SimplicialComplex, F) -> bool:
    """Sufficient test only: leaves split.  False means "not certified"."""
    return is_leaf(D, F)


def make_facet_split(D: SimplicialComplex, F) -> FacetSplit:
    m = D.facet_mask(F)
    if not is_leaf(D, m):
        raise PreconditionError(f"{list(D.names_of(m))} is not a leaf; no splitting is certified")
    return FacetSplit(
        facet=D.names_of(m),
        D_minus_F=remove_facet(D, m),
        conn_bar=reduced_conn(D, m),
        omega=omega(D, m),
        D=D,
    )


# ---------------------------------------------------------------------------
# splitting functions and their verification


@dataclass
class SplitVerdict:
    verified: bool
    reason: str
    method: str = ""
    witness: object = None
    n_intersection: int = 0

    def __bool__(self):
        return self.verified


@dataclass
class SplittingData:
    """A proposed splitting I = J + K with an explicit phi/psi on G(J cap K).

    All ideals share ``ambient``; the maps are keyed by generator bitmasks.
    """

    I: MonomialIdeal
    J: MonomialIdeal
    K: MonomialIdeal
    phi: dict[int, int] = field(default_factory=dict)
    psi: dict[int, int] = field(default_factory=dict)
    failure: str | None = None
    witness: object = None
    forced: set[int] = field(default_factory=set)  # w with a single admissible (phi, psi)


def _aligned(I, J, K):
    amb = ideals._common_ambient(I, J, K)
    return I.embed(amb), J.embed(amb), K.embed(amb)


def _candidates(w: int, gens: Sequence[int], partner: int) -> list[int]:
    return [g for g in gens if g | partner == w]


def edge_splitting_data(G: Graph, e) -> SplittingData:
    """J = (uv), K = I(G minus e); phi is constant, psi avoids the dominated endpoint.

    For a non-splitting edge psi is forced wherever a single candidate exists,
    which is how the classification proof rules out every splitting function.
    """
    u, v = e
    G.edge_mask(e)
    I, J, K = _aligned(ideals.edge_ideal(G), ideals.principal([u, v]), ideals.edge_ideal(delete_edge(G, e)))
    data = SplittingData(I, J, K)
    uv = J.gens[0]
    dom = _dominated_endpoints(G, e)
    avoid = I.mask_of([dom[0]]) if dom else 0
    for w in ideals.intersect(J, K).gens:
        cands = _candidates(w, K.gens, uv)
        good = [g for g in cands if not g & avoid] if avoid else cands
        data.phi[w] = uv
        data.psi[w] = (good or cands)[0]
        if len(cands) == 1:
            data.forced.add(w)
    return data


def vertex_splitting_data(G: Graph, v: str) -> SplittingData:
    """J = (v v_1, ..., v v_d), K = I(G minus v), with the neighbor-order tie-break."""
    nbrs = _sorted_neighbors(G, v)
    star = ideals.MonomialIdeal.from_supports([(v, w) for w in nbrs])
    I, J, K = _aligned(ideals.edge_ideal(G), star, ideals.edge_ideal(delete_vertices(G, [v])))
    data = SplittingData(I, J, K)
    vm = I.mask_of([v])
    rank = {I.mask_of([w]): t for t, w in enumerate(nbrs)}
    for w in ideals.intersect(J, K).gens:
        rest = w & ~vm
        inside = [b for b in rank if rest & b]
        if len(inside) == 2 and popcount(rest) == 2:
            first = min(inside, key=rank.__getitem__)
            data.phi[w], data.psi[w] = vm | first, rest
        elif len(inside) == 1:
            vi = inside[0]
            data.phi[w] = vm | vi
            data.psi[w] = rest if popcount(rest) == 2 else rest & ~vi
        else:
            data.failure = "intersection generator outside the expected shapes"
            data.witness = I.names_of(w)
            return data
    return data


def facet_splitting_data(D: SimplicialComplex, F) -> SplittingData:
    """J = (F), K = I(D minus F); psi(L) is the facet whose trace on F is lexicographically least."""
    m = D.facet_mask(F)
    I = ideals.facet_ideal(D)
    J = ideals.MonomialIdeal(D.vertices, (m,))
    K = ideals.facet_ideal(remove_facet(D, m))
    data = SplittingData(I, J, K)
    for w in ideals.intersect(J, K).gens:
        cands = _candidates(w, K.gens, m)
        data.phi[w] = m
        data.psi[w] = min(cands, key=lambda g: list(iter_bits(g & m)))
    return data


def _subset_lcms(values: Sequence[int]) -> np.ndarray:
    """lcm (bitwise or) of every subset of ``values``, indexed by subset bitmask."""
    acc = np.zeros(1, dtype=np.uint64)
    for x in values:
        acc = np.concatenate([acc, acc | np.uint64(x)])
    return acc


def _first_bad_subset(gens, phi_vals, psi_vals) -> tuple[str, int] | None:
    if max(gens, default=0).bit_length() > 64:
        return _first_bad_subset_slow(gens, phi_vals, psi_vals)
    full = _subset_lcms(gens)[1:]
    sizes = None
    for label, vals in (("phi", phi_vals), ("psi", psi_vals)):
        part = _subset_lcms(vals)[1:]
        bad = np.flatnonzero(part == full)
        if bad.size:
            if sizes is None:
                sizes = _subset_sizes(len(gens))[1:]
            # report a smallest offending subset
            return label, int(bad[np.argmin(sizes[bad])]) + 1
    return None


def _subset_sizes(k: int) -> np.ndarray:
    acc = np.zeros(1, dtype=np.int8)
    for _ in range(k):
        acc = np.concatenate([acc, acc + 1])
    return acc


def _first_bad_subset_slow(gens, phi_vals, psi_vals):
    for label, vals in (("phi", phi_vals), ("psi", psi_vals)):
        full, part = [0], [0]
        for g, x in zip(gens, vals):
            full += [f | g for f in full]
            part += [p | x for p in part]
        bad = [s for s in range(1, len(full)) if full[s] == part[s]]
        if bad:
            return label, min(bad, key=popcount)
    return None


def _certify(gens, phi, psi, J) -> str | None:
    """Variable-exclusion certificates for condition (b); None if they cover every subset."""
    # psi: one variable divides every w and no psi(w)
    common = ~0
    for w in gens:
        common &= w
    for w in gens:
        common &= ~psi[w]
    if not common:
        return "no variable divides every generator of J cap K while missing every psi value"
    # phi: a w with a variable outside supp(J) is handled by that variable; the
    # rest must miss phi(w) at their top variable once variables shared by all
    # phi values are ignored
    supp_j = 0
    for g in J.gens:
        supp_j |= g
    inner = [w for w in gens if not w & ~supp_j]
    shared = ~0
    for w in inner:
        shared &= phi[w]
    for w in inner:
        rest = w & ~shared
        if not rest or phi[w] & (1 << (rest.bit_length() - 1)):
            return "phi certificate fails at a generator inside supp(J)"
    return None


def verify_splitting(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal,
                     phi: dict[int, int] | Callable | None = None,
                     psi: dict[int, int] | Callable | None = None,
                     subset_cap: int = DEFAULT_SUBSET_CAP) -> SplitVerdict:
    """Check that (phi, psi) is a splitting function for I = J + K.

    ``phi``/``psi`` map generator bitmasks of J cap K (over the common
    ambient of I, J, K) to generators of J and K.  Condition (b) is checked
    over all nonempty subsets when G(J cap K) has at most ``subset_cap``
    elements, otherwise by the variable-exclusion certificates.
    """
    I, J, K = _aligned(I, J, K)
    if J.is_zero or K.is_zero:
        return SplitVerdict(False, "J and K must both be nonzero")
    gj, gk = set(J.gens), set(K.gens)
    if gj & gk or gj | gk != set(I.gens):
        return SplitVerdict(False, "G(I) is not the disjoint union of G(J) and G(K)",
                            witness=[I.names_of(g) for g in (gj & gk) or (set(I.gens) ^ (gj | gk))])
    JK = ideals.intersect(J, K)
    gens = list(JK.gens)
    as_fn = lambda f: f if callable(f) else (f or {}).__getitem__  # noqa: E731
    phi_f, psi_f = as_fn(phi), as_fn(psi)
    phi_m, psi_m = {}, {}
    for w in gens:
        try:
            a, b = phi_f(w), psi_f(w)
        except KeyError:
            return SplitVerdict(False, "splitting function undefined at a generator",
                                witness=I.names_of(w), n_intersection=len(gens))
        if a not in gj or b not in gk:
            return SplitVerdict(False, "splitting function leaves G(J) x G(K)",
                                witness=I.names_of(w), n_intersection=len(gens))
        if a | b != w:
            return SplitVerdict(False, "condition (a) fails: lcm(phi(w), psi(w)) != w",
                                witness=I.names_of(w), n_intersection=len(gens))
        phi_m[w], psi_m[w] = a, b
    if len(gens) <= subset_cap:
        bad = _first_bad_subset(gens, [phi_m[w] for w in gens], [psi_m[w] for w in gens])
        if bad:
            label, s = bad
            S = [I.names_of(gens[t]) for t in iter_bits(s)]
            return SplitVerdict(False, f"condition (b) fails: lcm({label}(S)) = lcm(S)",
                                "exhaustive", witness=S, n_intersection=len(gens))
        return SplitVerdict(True, "splitting function verified", "exhaustive",
                            n_intersection=len(gens))
    problem = _certify(gens, phi_m, psi_m, J)
    if problem:
        return SplitVerdict(False, f"not verified: {problem}", "certificate", n_intersection=len(gens))
    return SplitVerdict(True, "splitting function certified", "certificate", n_intersection=len(gens))


def _verify_data(data: SplittingData, subset_cap: int) -> SplitVerdict:
    if data.failure:
        return SplitVerdict(False, data.failure, witness=data.witness)
    return verify_splitting(data.I, data.J, data.K, data.phi, data.psi, subset_cap)


def check_edge_split(G: Graph, e, subset_cap: int = DEFAULT_SUBSET_CAP) -> SplitVerdict:
    data = edge_splitting_data(G, e)
    verdict = _verify_data(data, subset_cap)
    if not verdict and verdict.method == "exhaustive" and verdict.witness:
        S = {data.I.mask_of(names) for names in verdict.witness}
        if S <= data.forced:
            verdict.reason += "; phi and psi are forced on this subset, so no splitting function exists"
    return verdict


def check_vertex_split(G: Graph, v: str, subset_cap: int = DEFAULT_SUBSET_CAP) -> SplitVerdict:
    if not G.adj[G.idx(v)]:
        raise InputError(f"{v} is isolated; (v) + I(G minus v) has J = 0")
    return _verify_data(vertex_splitting_data(G, v), subset_cap)


def check_facet_split(D: SimplicialComplex, F, subset_cap: int = DEFAULT_SUBSET_CAP) -> SplitVerdict:
    return _verify_data(facet_splitting_data(D, F), subset_cap)
