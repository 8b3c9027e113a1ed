"""Ground-truth graded Betti numbers through Hochster's formula.

For a squarefree monomial ideal I with Stanley-Reisner complex D(I),

    beta_{i,j}(I) = sum over |W| = j of dim H~_{j-i-2}(D(I)_W; k).

The restriction D(I)_W is a cone (hence acyclic) unless W is a union of
generators of I, so only those W are visited.  W = {} contributes the
conventional beta_{-1,0} = 1, which survives only for the zero ideal.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .errors import ResourceError
from .graph import iter_bits, popcount
from .ideal import MonomialIdeal
from .linalg import _eliminate, check_characteristic, rank_gf2
from .table import BettiTable

DEFAULT_VERTEX_CAP = 20


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        check_characteristic(self.characteristic)

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


def _as_char(k) -> int:
    return k.characteristic if isinstance(k, FieldSpec) else check_characteristic(int(k))


def _boundary_rank(upper: Sequence[int], lower: Sequence[int], p: int) -> int:
    """Rank of the boundary map from faces ``upper`` (size r+1) to ``lower`` (size r)."""
    if not upper or not lower:
        return 0
    pos = {f: c for c, f in enumerate(lower)}
    if p == 2:
        rows = []
        for f in upper:
            m = 0
            for v in iter_bits(f):
                m |= 1 << pos[f & ~(1 << v)]
            rows.append(m)
        return rank_gf2(rows)
    rows = []
    for f in upper:
        row = {}
        for k, v in enumerate(iter_bits(f)):
            row[pos[f & ~(1 << v)]] = -1 if k % 2 else 1
        rows.append(row)
    return _eliminate(rows, p)


def reduced_homology_dims(faces: Iterable[int], k=QQ) -> list[int]:
    """dim H~_r for r = -1, 0, ..., top; entry r + 1 of the returned list.

    ``faces`` must be a downward-closed family of vertex bitmasks; the empty
    face is added if missing (the chain complex is augmented).
    """
    p = _as_char(k)
    by_size: dict[int, list[int]] = {0: [0]}
    for f in set(faces):
        if f:
            by_size.setdefault(popcount(f), []).append(f)
    top = max(by_size)
    chains = [sorted(by_size.get(s, [])) for s in range(top + 1)]
    # ranks[s] = rank of boundary from size-s faces to size-(s-1) faces
    ranks = [0] + [_boundary_rank(chains[s], chains[s - 1], p) for s in range(1, top + 1)] + [0]
    dims = [len(chains[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1)]
    euler_faces = sum((-1) ** s * len(chains[s]) for s in range(top + 1))
    euler_hom = sum((-1) ** s * d for s, d in enumerate(dims))
    if euler_faces != euler_hom:
        raise RuntimeError("Euler-Poincare check failed: homology ranks are inconsistent")
    return dims


def faces_from_facets(facets: Iterable[int]) -> set[int]:
    out = set()
    for f in facets:
        sub = f
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return out


def restriction_faces(gens: Sequence[int], W: int) -> list[int]:
    """Faces of the Stanley-Reisner complex restricted to W: subsets of W containing no generator."""
    inside = [g for g in gens if g & ~W == 0]
    by_vertex: dict[int, list[int]] = {}
    for g in inside:
        for v in iter_bits(g):
            by_vertex.setdefault(v, []).append(g)
    verts = list(iter_bits(W))
    faces = [0]
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        for t in range(start, len(verts)):
            v = verts[t]
            cand = face | (1 << v)
            if any(g & ~cand == 0 for g in by_vertex.get(v, ())):
                continue
            faces.append(cand)
            stack.append((cand, t + 1))
    return faces


def generator_unions(gens: Sequence[int]) -> list[int]:
    """All distinct unions of subsets of ``gens`` (including the empty union), by size then value."""
    unions = {0}
    for g in gens:
        unions |= {u | g for u in unions}
    return sorted(unions, key=lambda m: (popcount(m), m))


def _contributions(gens: tuple[int, ...], Ws: Sequence[int], p: int) -> dict:
    out: dict[tuple[int, int], int] = {}
    for W in Ws:
        j = popcount(W)
        dims = reduced_homology_dims(restriction_faces(gens, W), p)
        for s, d in enumerate(dims):
            if d:
                # H~_r with r = s - 1 = j - i - 2
                i = j - s - 1
                out[(i, j)] = out.get((i, j), 0) + d
    return out


def _contrib_job(args):
    return _contributions(*args)


def _compress(I: MonomialIdeal) -> tuple[int, ...]:
    support = list(iter_bits(I.support_mask()))
    pos = {v: k for k, v in enumerate(support)}
    out = []
    for g in I.gens:
        m = 0
        for v in iter_bits(g):
            m |= 1 << pos[v]
        out.append(m)
    return tuple(sorted(out))


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("BETTISPLIT_THREADS", "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=1 << 16)
def _oracle_cached(gens: tuple[int, ...], p: int) -> BettiTable:
    return BettiTable(_contributions(gens, generator_unions(gens), p))


def betti_oracle(I: MonomialIdeal, k=QQ, vertex_cap: int = DEFAULT_VERTEX_CAP,
                 workers: int | None = None) -> BettiTable:
    """Graded Betti numbers of I over the field ``k`` (a FieldSpec or characteristic)."""
    p = _as_char(k)
    gens = _compress(I)
    nvars = popcount(I.support_mask())
    if nvars > vertex_cap:
        raise ResourceError(
            f"oracle enumerates vertex subsets and is capped at {vertex_cap} variables "
            f"(ideal uses {nvars}); raise --vertex-cap to override"
        )
    workers = default_workers() if workers is None else workers
    if workers <= 1:
        return _oracle_cached(gens, p)
    Ws = generator_unions(gens)
    chunks = [(gens, Ws[s::workers], p) for s in range(workers)]
    total: dict[tuple[int, int], int] = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_contrib_job, chunks):
            for key, v in part.items():
                total[key] = total.get(key, 0) + v
    return BettiTable(total)


class CalibrationError(AssertionError):
    pass


def calibration_cases() -> list[tuple[str, MonomialIdeal, BettiTable]]:
    """Reference ideals whose tables are known independently of the oracle."""
    cases = []
    for d in range(1, 5):
        star = MonomialIdeal.from_supports([("v", f"v{t}") for t in range(1, d + 1)])
        cases.append((f"K1,{d}", star, BettiTable({(i, i + 2): comb(d, i + 1) for i in range(d)})))
    ex = [("x1", "x2"), ("x2", "x3"), ("x2", "x4"), ("x4", "x5"), ("x4", "x6")]
    cases.append(("example", MonomialIdeal.from_supports(ex),
                  BettiTable({(0, 2): 5, (1, 3): 6, (2, 4): 2})))
    cases.append(("example minus x2x4", MonomialIdeal.from_supports([e for e in ex if e != ("x2", "x4")]),
                  BettiTable({(0, 2): 4, (1, 3): 2, (1, 4): 4, (2, 5): 4, (3, 6): 1})))
    cases.append(("edge", MonomialIdeal.from_supports([("a", "b")]), BettiTable({(0, 2): 1})))
    cases.append(("2K2", MonomialIdeal.from_supports([("a", "b"), ("c", "d")]),
                  BettiTable({(0, 2): 2, (1, 4): 1})))
    return cases


def calibrate(k=QQ) -> None:
    """Check the index convention against known tables; raise CalibrationError on mismatch."""
    for name, I, expected in calibration_cases():
        got = betti_oracle(I, k, workers=1)
        if got != expected:
            raise CalibrationError(f"oracle over {k} disagrees on {name}: {dict(got)} != {dict(expected)}")
