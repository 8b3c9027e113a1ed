"""Exact matrix rank over Q or GF(p) for sparse integer matrices.

Over Q the elimination is fraction free: a row update is
``row = p * row - a * pivot_row`` followed by division by the gcd of the
row's entries, which keeps entries small on boundary matrices.  GF(2)
packs each row into a Python int and eliminates with xor.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import InputError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def check_characteristic(p: int) -> int:
    if p != 0 and not is_prime(p):
        raise InputError(f"characteristic must be 0 or a prime, got {p}")
    return p


def _as_sparse(M) -> list[dict[int, int]]:
    rows = []
    for r in M:
        if isinstance(r, Mapping):
            rows.append({c: v for c, v in r.items() if v})
        else:
            rows.append({c: v for c, v in enumerate(r) if v})
    return rows


def rank_gf2(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows given as bitmask ints."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                break
            r ^= p
    return len(pivots)


def _eliminate(rows: list[dict[int, int]], p: int) -> int:
    """Shared sparse elimination; p == 0 means exact integers, else arithmetic mod p."""
    if p:
        rows = [{c: v % p for c, v in r.items() if v % p} for r in rows]
    live = {k: r for k, r in enumerate(rows) if r}
    cols: dict[int, set[int]] = {}
    for k, r in live.items():
        for c in r:
            cols.setdefault(c, set()).add(k)
    rank = 0
    while live:
        # shortest row first limits fill-in
        k = min(live, key=lambda t: (len(live[t]), t))
        row = live.pop(k)
        for c in row:
            cols[c].discard(k)
        if p:
            c = min(row, key=lambda t: (len(cols[t]), t))
        else:
            # prefer a unit pivot, then the sparsest column
            c = min(row, key=lambda t: (abs(row[t]) != 1, len(cols[t]), t))
        piv = row[c]
        if p:
            inv = pow(piv, p - 2, p)
        for t in list(cols[c]):
            target = live[t]
            a = target[c]
            if p:
                f = a * inv % p
                for cc, vv in row.items():
                    nv = (target.get(cc, 0) - f * vv) % p
                    _store(target, cols, t, cc, nv)
            else:
                if a % piv == 0:
                    f, scale = a // piv, 1
                else:
                    g = gcd(a, piv)
                    f, scale = a // g, piv // g
                if scale != 1:
                    for cc in target:
                        target[cc] *= scale
                for cc, vv in row.items():
                    nv = target.get(cc, 0) - f * vv
                    _store(target, cols, t, cc, nv)
                if target:
                    g = 0
                    for vv in target.values():
                        g = gcd(g, vv)
                        if g == 1:
                            break
                    if g > 1:
                        for cc in target:
                            target[cc] //= g
            if not target:
                del live[t]
        rank += 1
    return rank


def _store(target: dict, cols: dict, t: int, c: int, v: int):
    if v:
        if c not in target:
            cols.setdefault(c, set()).add(t)
        target[c] = v
    elif c in target:
        del target[c]
        cols[c].discard(t)


def exact_rank(M: Sequence, characteristic: int = 0) -> int:
    """Rank of an integer matrix over Q (characteristic 0) or GF(p).

    ``M`` is a sequence of rows, each a dense sequence or a {column: value} map.
    """
    check_characteristic(characteristic)
    rows = _as_sparse(M)
    if characteristic == 2:
        packed = []
        for r in rows:
            m = 0
            for c, v in r.items():
                if v % 2:
                    m |= 1 << c
            packed.append(m)
        return rank_gf2(packed)
    return _eliminate(rows, characteristic)
