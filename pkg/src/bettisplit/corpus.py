"""Deterministic generators for the test and sweep corpora."""

from __future__ import annotations

import heapq
import itertools
import random
from typing import Iterator

from .complex import SimplicialComplex
from .graph import Graph, iter_bits


def names(n: int, prefix: str = "v") -> list[str]:
    return [f"{prefix}{k}" for k in range(n)]


def prufer_tree(seq, n: int) -> Graph:
    """Decode a Prüfer sequence of length n - 2 over range(n)."""
    vs = names(n)
    if n == 1:
        return Graph.from_edges([], vertices=vs)
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    leaves = [k for k in range(n) if degree[k] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((vs[leaf], vs[a]))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((vs[u], vs[w]))
    return Graph.from_edges(edges, vertices=vs)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    for seq in itertools.product(range(n), repeat=max(n - 2, 0)):
        yield prufer_tree(seq, n)


def random_tree(n: int, rng: random.Random) -> Graph:
    return prufer_tree([rng.randrange(n) for _ in range(max(n - 2, 0))], n)


def random_forest(rng: random.Random, max_vertices: int = 10) -> Graph:
    """A random tree with a random number of edges deleted; always keeps one edge."""
    n = rng.randint(2, max_vertices)
    T = random_tree(n, rng)
    edges = T.edges()
    keep = rng.sample(edges, rng.randint(1, len(edges)))
    return Graph.from_edges(keep, vertices=T.vertices)


def labeled_graphs(n: int, min_edges: int = 0) -> Iterator[Graph]:
    """Every simple graph on the labeled vertex set v0..v{n-1}."""
    vs = names(n)
    pairs = list(itertools.combinations(vs, 2))
    for mask in range(1 << len(pairs)):
        if bin(mask).count("1") < min_edges:
            continue
        yield Graph.from_edges([p for k, p in enumerate(pairs) if mask >> k & 1], vertices=vs)


def random_simplicial_forest(rng: random.Random, max_facets: int = 6, max_vertices: int = 12,
                             pure_size: int | None = None) -> SimplicialComplex:
    """Iterated leaf attachment.

    A new facet is S plus at least one fresh vertex, where S is a proper subset
    of an existing facet P made of vertices private to P plus at most one other
    vertex of P (S may be empty, which starts a new component).  In any
    subcomplex the new facet then meets every other facet in at most that one
    shared vertex, or in a subset of P when P is present, so it stays a leaf and
    the result is a simplicial forest.  Unrestricted S can break this.
    """
    size = lambda: pure_size or rng.randint(1, 4)  # noqa: E731
    fresh = itertools.count()
    first = [f"w{next(fresh)}" for _ in range(size())]
    facets: list[list[str]] = [first]
    target = rng.randint(1, max_facets)
    used = len(first)
    attempts = 0
    while len(facets) < target and attempts < 50:
        attempts += 1
        parent = rng.choice(facets)
        private = [x for x in parent if not any(x in f for f in facets if f is not parent)]
        shared = [x for x in parent if x not in private]
        S = [x for x in private if rng.random() < 0.6]
        if shared and rng.random() < 0.5:
            S.append(rng.choice(shared))
        elif private and rng.random() < 0.3:
            S = S or [rng.choice(private)]
        if rng.random() < 0.15:
            S = []
        k = size()
        if len(S) >= len(parent):
            S = S[: len(parent) - 1]
        if len(S) >= k:
            S = rng.sample(S, k - 1)
        new = k - len(S)
        if new < 1 or used + new > max_vertices:
            continue
        facets.append(S + [f"w{next(fresh)}" for _ in range(new)])
        used += new
    return SimplicialComplex.from_facets(facets)


def simplicial_forest_corpus(count: int = 200, seed: int = 0) -> list[SimplicialComplex]:
    """Half pure (facet size 2 or 3), half mixed-size."""
    rng = random.Random(seed)
    out = []
    for t in range(count):
        pure = rng.choice((2, 3)) if t % 2 == 0 else None
        out.append(random_simplicial_forest(rng, pure_size=pure))
    return out


def forest_corpus(count: int = 200, seed: int = 0, max_vertices: int = 10) -> list[Graph]:
    rng = random.Random(seed)
    return [random_forest(rng, max_vertices) for _ in range(count)]


def tree_sample(count: int, seed: int, sizes=(7, 8)) -> list[Graph]:
    rng = random.Random(seed)
    return [random_tree(rng.choice(sizes), rng) for _ in range(count)]


def mask_names(G: Graph, mask: int) -> list[str]:
    return [G.vertices[k] for k in iter_bits(mask)]
