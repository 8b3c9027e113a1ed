"""Betti numbers of edge and facet ideals from splitting recursions.

Tables are ideal level throughout (see :mod:`bettisplit.table`).  Every
recursion below fills the i = 0 row from generator counts and uses its
formula for i >= 1 only, with beta_{-1,0} = 1 for any ideal and binomial
coefficients that vanish outside 0 <= l <= n.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Callable

from .complex import (
    DEFAULT_FACET_CAP,
    SimplicialComplex,
    codim1_faces,
    face_degree,
    find_leaf,
    find_leafless_subcomplex,
    pure_dimension,
)
from .errors import InputError, PreconditionError
from .graph import (
    Graph,
    clique_count,
    complement,
    connected_components,
    delete_vertices,
    find_cycle,
    find_induced_c4,
    find_leaf_edge,
    induced_matching_number,
    is_chordal,
    is_forest,
    leaf_edges,
    popcount,
    shortest_minimal_cycle,
)
from .ideal import edge_ideal
from .splitting import EdgeSplit, FacetSplit, VertexSplit, make_edge_split, make_facet_split
from .table import BettiTable

Evaluator = Callable[[Graph], BettiTable]


def binom(n: int, l: int) -> int:
    return math.comb(n, l) if 0 <= l <= n else 0


def _top_index(t: BettiTable) -> int:
    return -1 if t.pd is None else t.pd


def betti_k1d(d: int) -> BettiTable:
    """Edge ideal of the star K_{1,d}: beta_{i,i+2} = C(d, i+1)."""
    if d < 1:
        raise InputError("K_{1,d} needs d >= 1")
    return BettiTable({(i, i + 2): binom(d, i + 1) for i in range(d)})


def tensor_combine(A: BettiTable, B: BettiTable) -> BettiTable:
    """Table of I + J for ideals I, J in disjoint sets of variables.

    Quotient-level tables multiply as a convolution in both indices.
    """
    qa, qb = A.quotient(), B.quotient()
    out: dict[tuple[int, int], int] = {}
    for (i1, j1), x in qa.items():
        for (i2, j2), y in qb.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + x * y
    return BettiTable.from_quotient(out)


def edge_split_betti(split: EdgeSplit, betti_of: Evaluator) -> BettiTable:
    """beta(I(G)) from a splitting edge: G minus e plus binomially weighted shifts of H."""
    rest = betti_of(split.G_minus_e)
    tH = betti_of(split.H)
    n = split.n
    out = {(0, 2): split.G.num_edges}
    for (i, j), v in rest.nonzero().items():
        if i >= 1:
            out[(i, j)] = out.get((i, j), 0) + v
    for i in range(1, _top_index(tH) + n + 2):
        for j in range(i + 2, tH.max_degree + n + 3):
            s = sum(binom(n, l) * tH.beta(i - l - 1, j - 2 - l) for l in range(i + 1))
            if s:
                out[(i, j)] = out.get((i, j), 0) + s
    return BettiTable(out)


_forest_memo: dict = {}


def _forest_rec(G: Graph) -> BettiTable:
    hit = _forest_memo.get(G.key)
    if hit is not None:
        return hit
    comps = [c for c in connected_components(G) if c.num_edges]
    if not comps:
        result = BettiTable.zero()
    elif len(comps) > 1:
        result = reduce(tensor_combine, (_forest_rec(c) for c in comps))
    else:
        (edge, _leaf) = find_leaf_edge(comps[0])
        result = edge_split_betti(make_edge_split(comps[0], edge), _forest_rec)
    _forest_memo.setdefault(G.key, result)
    return result


def _require_forest(G: Graph):
    if not is_forest(G):
        cyc = find_cycle(G)
        raise PreconditionError(f"graph is not a forest; cycle {' '.join(cyc)}", witness=cyc)


def forest_betti(G: Graph, top_leaf: tuple[str, str] | None = None) -> BettiTable:
    """Graded Betti numbers of I(G) for a forest G.

    ``top_leaf`` = (leaf, neighbor) forces the first split; by default
    components are combined with :func:`tensor_combine` and each component
    is split at :func:`find_leaf_edge`.
    """
    _require_forest(G)
    if top_leaf is None:
        return _forest_rec(G)
    leaf, _ = top_leaf
    if G.degree(leaf) != 1 or not G.has_edge(*top_leaf):
        raise PreconditionError(f"{leaf} is not a leaf attached to {top_leaf[1]}")
    return edge_split_betti(make_edge_split(G, top_leaf), _forest_rec)


def admissible_leaves(G: Graph) -> list[tuple[str, str]]:
    return leaf_edges(G)


def vertex_split_betti(split: VertexSplit, L_betti: BettiTable | None = None,
                       betti_of: Evaluator | None = None) -> BettiTable:
    """beta(I(G)) = beta(I(K_{1,d})) + beta(I(G minus v)) + beta_{i-1,j}(L).

    L is not an edge ideal, so its table comes from the caller or the oracle.
    """
    from .oracle import betti_oracle

    if L_betti is None:
        L_betti = betti_oracle(split.L)
    if betti_of is None:
        betti_of = lambda H: betti_oracle(edge_ideal(H))  # noqa: E731
    star = betti_k1d(len(split.neighbors))
    return star + betti_of(split.G_minus_v) + L_betti.shift(1, 0)


def _facet_sizes(D: SimplicialComplex) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for f in D.facets:
        key = (0, popcount(f))
        out[key] = out.get(key, 0) + 1
    return out


def facet_split_betti(split: FacetSplit, betti_of: Callable[[SimplicialComplex], BettiTable]) -> BettiTable:
    """beta(I(D)) from a splitting facet F: D minus F plus a double sum over the
    reduced connected component of F and the facets outside F's component."""
    rest = betti_of(split.D_minus_F)
    tC = betti_of(split.conn_bar)
    tO = betti_of(split.omega)
    f = len(split.facet)
    out = _facet_sizes(split.D)
    for (i, j), v in rest.nonzero().items():
        if i >= 1:
            out[(i, j)] = out.get((i, j), 0) + v
    i_top = _top_index(tC) + _top_index(tO) + 3
    j_top = f + tC.max_degree + tO.max_degree
    for i in range(1, i_top + 1):
        for j in range(f, j_top + 1):
            s = 0
            for l1 in range(i + 1):
                for l2 in range(j - f + 1):
                    a = tC.beta(l1 - 1, l2)
                    if a:
                        s += a * tO.beta(i - l1 - 1, j - f - l2)
            if s:
                out[(i, j)] = out.get((i, j), 0) + s
    return BettiTable(out)


_sforest_memo: dict = {}


def _sforest_rec(D: SimplicialComplex) -> BettiTable:
    key = D.key
    hit = _sforest_memo.get(key)
    if hit is not None:
        return hit
    if not D.facets:
        result = BettiTable.zero()
    else:
        F = find_leaf(D)
        if F is None:
            raise PreconditionError("no leaf found; complex is not a simplicial forest", witness=D)
        result = facet_split_betti(make_facet_split(D, F), _sforest_rec)
    _sforest_memo.setdefault(key, result)
    return result


def _require_simplicial_forest(D: SimplicialComplex, facet_cap: int):
    bad = find_leafless_subcomplex(D, facet_cap)
    if bad is not None:
        raise PreconditionError(f"not a simplicial forest; leafless subcomplex {bad}", witness=bad)


def simplicial_forest_betti(D: SimplicialComplex, facet_cap: int = DEFAULT_FACET_CAP) -> BettiTable:
    _require_simplicial_forest(D, facet_cap)
    return _sforest_rec(D)


_regpd_memo: dict = {}


def _regpd_rec(G: Graph) -> tuple[int, int] | None:
    if G.num_edges == 0:
        return None
    hit = _regpd_memo.get(G.key)
    if hit is not None:
        return hit
    (edge, _leaf) = find_leaf_edge(G)
    split = make_edge_split(G, edge)
    rest = _regpd_rec(split.G_minus_e)
    # the zero ideal enters through beta_{-1,0} = 1: reg 1, pd -1
    reg_h, pd_h = _regpd_rec(split.H) or (1, -1)
    reg = max(2, reg_h + 1, rest[0] if rest else 2)
    pd = max(pd_h + split.n + 1, rest[1] if rest else 0)
    _regpd_memo.setdefault(G.key, (reg, pd))
    return reg, pd


def reg_and_pd_forest(G: Graph) -> tuple[int, int]:
    """(reg, pd) of I(G) for a forest with at least one edge, without building tables."""
    _require_forest(G)
    if G.num_edges == 0:
        raise PreconditionError("reg and pd of the zero ideal are undefined")
    return _regpd_rec(G)


def reg_forest_via_matching(G: Graph) -> int:
    _require_forest(G)
    if G.num_edges == 0:
        raise PreconditionError("reg of the zero ideal is undefined")
    return induced_matching_number(G) + 1


def _default_table(G: Graph) -> BettiTable:
    from .oracle import betti_oracle

    return forest_betti(G) if is_forest(G) else betti_oracle(edge_ideal(G))


def reg_pd_lower_bounds(G: Graph, v: str, table_of: Evaluator | None = None) -> tuple[int, int]:
    """Lower bounds (reg, pd) for I(G) from deleting the vertex v."""
    d = G.degree(v)
    t = (table_of or _default_table)(delete_vertices(G, [v]))
    reg = max(2, t.reg if t.reg is not None else 2)
    pd = max(d - 1, t.pd if t.pd is not None else d - 1)
    return reg, pd


def linear_strand_no_C4(G: Graph, i_max: int) -> list[int]:
    """beta_{i,i+2}(I(G)) for 0 <= i <= i_max when G has no induced 4-cycle."""
    c4 = find_induced_c4(G)
    if c4 is not None:
        raise PreconditionError(f"graph has an induced 4-cycle {' '.join(c4)}", witness=c4)
    degs = [popcount(row) for row in G.adj]
    return [sum(binom(d, i + 1) for d in degs) - clique_count(G, i + 2) for i in range(i_max + 1)]


def has_linear_resolution(G: Graph) -> bool:
    """I(G) has a linear resolution iff the complement of G is chordal."""
    return is_chordal(complement(G))


def n2p_max(G: Graph) -> float:
    """Largest p with property N_{2,p}; ``math.inf`` when the resolution is linear.

    Every minimal cycle of the complement has length >= p + 3; p = 1 always holds.
    """
    if G.num_edges == 0:
        raise InputError("N_{2,p} needs at least one edge")
    Gc = complement(G)
    if is_chordal(Gc):
        return math.inf
    return max(1, shortest_minimal_cycle(Gc) - 3)


def pure_forest_linear_strand(D: SimplicialComplex, i_max: int,
                              facet_cap: int = DEFAULT_FACET_CAP) -> list[int]:
    """beta_{i,i+d} for a pure (d-1)-dimensional simplicial forest, d >= 2."""
    d = pure_dimension(D)
    if d is None:
        raise PreconditionError("complex is not pure")
    if d < 2:
        raise PreconditionError("needs facets of size at least 2")
    _require_simplicial_forest(D, facet_cap)
    faces = codim1_faces(D)
    degs = [face_degree(D, G) for G in faces]
    out = [len(D.facets)]
    for i in range(1, i_max + 1):
        out.append(sum(binom(g, i + 1) for g in degs))
    return out[: i_max + 1]


def clear_memos():
    _forest_memo.clear()
    _sforest_memo.clear()
    _regpd_memo.clear()
