"""Simple graphs on named vertices, stored as per-vertex adjacency bitsets.

Bit ``k`` of ``adj[i]`` is set when vertices ``i`` and ``k`` are adjacent.
Vertex indices follow the order in which names were supplied, so every
derived graph (deletions, induced subgraphs, components) keeps the relative
order of its parent.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, ResourceError

WORD_BITS = 64


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    adj: tuple[int, ...]
    wide: bool = False

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise InputError("duplicate vertex names")
        if len(self.adj) != n:
            raise InputError("adjacency length does not match vertex count")
        if n > WORD_BITS and not self.wide:
            raise ResourceError(
                f"graph has {n} vertices, above the {WORD_BITS}-vertex fast path; "
                "pass wide=True to allow it"
            )
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"adjacency of {self.vertices[i]!r} points outside the graph")
            if row >> i & 1:
                raise InputError(f"loop at vertex {self.vertices[i]!r}")
            for k in iter_bits(row):
                if not self.adj[k] >> i & 1:
                    raise InputError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[str]], vertices: Iterable[str] = (), wide=False):
        """Build a graph from name pairs; extra ``vertices`` may be isolated.

        Vertex order is ``vertices`` first, then first appearance in ``edges``.
        Repeated edges are merged.
        """
        order: dict[str, int] = {}
        for v in vertices:
            order.setdefault(str(v), len(order))
        pairs = []
        for e in edges:
            u, v = (str(x) for x in e)
            if u == v:
                raise InputError(f"loop at vertex {u!r}")
            for x in (u, v):
                order.setdefault(x, len(order))
            pairs.append((order[u], order[v]))
        adj = [0] * len(order)
        for a, b in pairs:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(tuple(order), tuple(adj), wide)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def key(self):
        """Memo key: adjacency under the identity labeling (names ignored)."""
        return (len(self.adj), self.adj)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def idx(self, v: str) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def mask_of(self, names: Iterable[str]) -> int:
        m = 0
        for v in names:
            m |= 1 << self.idx(v)
        return m

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in iter_bits(mask))

    def degree(self, v: str) -> int:
        return popcount(self.adj[self.idx(v)])

    def edge_masks(self) -> list[int]:
        """Edges as two-bit masks, ordered by (smaller index, larger index)."""
        out = []
        for i, row in enumerate(self.adj):
            for k in iter_bits(row >> (i + 1)):
                out.append((1 << i) | (1 << (i + 1 + k)))
        return out

    def edges(self) -> list[tuple[str, str]]:
        return [self.names_of(m) for m in self.edge_masks()]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.adj[self.idx(u)] >> self.idx(v) & 1)

    def edge_mask(self, e: Sequence[str]) -> int:
        u, v = e
        if u == v or not self.has_edge(u, v):
            raise InputError(f"{u}{v} is not an edge")
        return (1 << self.idx(u)) | (1 << self.idx(v))

    def _subgraph_on(self, keep: int) -> "Graph":
        idx = list(iter_bits(keep))
        pos = {old: new for new, old in enumerate(idx)}
        adj = []
        for old in idx:
            row = 0
            for k in iter_bits(self.adj[old] & keep):
                row |= 1 << pos[k]
            adj.append(row)
        return Graph(tuple(self.vertices[i] for i in idx), tuple(adj), self.wide)

    def __str__(self):
        return f"Graph({self.n} vertices, edges={self.edges()})"


def neighbors(G: Graph, v: str) -> frozenset[str]:
    return frozenset(G.names_of(G.adj[G.idx(v)]))


def delete_edge(G: Graph, e: Sequence[str]) -> Graph:
    m = G.edge_mask(e)
    i, k = iter_bits(m)
    adj = list(G.adj)
    adj[i] &= ~(1 << k)
    adj[k] &= ~(1 << i)
    return Graph(G.vertices, tuple(adj), G.wide)


def delete_vertices(G: Graph, S: Iterable[str]) -> Graph:
    return G._subgraph_on(G.all_mask & ~G.mask_of(S))


def induced_subgraph(G: Graph, S: Iterable[str]) -> Graph:
    return G._subgraph_on(G.mask_of(S))


def complement(G: Graph) -> Graph:
    full = G.all_mask
    return Graph(G.vertices, tuple(full & ~row & ~(1 << i) for i, row in enumerate(G.adj)), G.wide)


def component_masks(G: Graph) -> list[int]:
    seen = 0
    comps = []
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for i in iter_bits(frontier):
                nxt |= G.adj[i]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def connected_components(G: Graph) -> list[Graph]:
    return [G._subgraph_on(m) for m in component_masks(G)]


def is_chordal(G: Graph) -> bool:
    """Maximum-cardinality search, then check the order is perfect elimination."""
    n = G.n
    weight = [0] * n
    numbered = 0
    order = []
    for _ in range(n):
        best = max((i for i in range(n) if not numbered >> i & 1), key=lambda i: (weight[i], -i))
        order.append(best)
        numbered |= 1 << best
        for k in iter_bits(G.adj[best] & ~numbered):
            weight[k] += 1
    # reversed MCS order is a PEO iff G is chordal
    pos = {v: p for p, v in enumerate(order)}
    for v in order:
        earlier = [k for k in iter_bits(G.adj[v]) if pos[k] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.__getitem__)
        rest = 0
        for k in earlier:
            if k != parent:
                rest |= 1 << k
        if rest & ~G.adj[parent]:
            return False
    return True


def _bfs_path(adj: Sequence[int], allowed: int, src: int, dst: int):
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in iter_bits(adj[x] & allowed):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    return None


def shortest_hole(G: Graph) -> list[str] | None:
    """Shortest induced cycle of length >= 4, as a vertex list, or None.

    For every induced path a-b-c, the shortest a..c path avoiding N[b]
    (apart from a and c) closes a chordless cycle through b.
    """
    best = None
    for b in range(G.n):
        nb = list(iter_bits(G.adj[b]))
        closed = G.adj[b] | (1 << b)
        for a, c in combinations(nb, 2):
            if G.adj[a] >> c & 1:
                continue
            allowed = G.all_mask & ~closed | (1 << a) | (1 << c)
            path = _bfs_path(G.adj, allowed, a, c)
            if path is not None and (best is None or len(path) + 1 < len(best)):
                best = [b] + path
    return None if best is None else [G.vertices[i] for i in best]


def shortest_minimal_cycle(G: Graph) -> int | None:
    hole = shortest_hole(G)
    return None if hole is None else len(hole)


def find_induced_c4(G: Graph) -> list[str] | None:
    for quad in combinations(range(G.n), 4):
        a, b, c, d = quad
        for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            edges = sum(G.adj[cyc[t]] >> cyc[(t + 1) % 4] & 1 for t in range(4))
            chords = (G.adj[cyc[0]] >> cyc[2] & 1) + (G.adj[cyc[1]] >> cyc[3] & 1)
            if edges == 4 and chords == 0:
                return [G.vertices[i] for i in cyc]
    return None


def find_cycle(G: Graph) -> list[str] | None:
    """Some cycle of G as a vertex list, or None when G is a forest."""
    parent: dict[int, int | None] = {}
    for root in range(G.n):
        if root in parent:
            continue
        parent[root] = None
        stack = [root]
        depth = {root: 0}
        while stack:
            x = stack.pop()
            for y in iter_bits(G.adj[x]):
                if y == parent[x]:
                    continue
                if y in parent:
                    # back edge x-y closes a cycle through the tree path
                    px, py = [x], [y]
                    while depth[px[-1]] > depth[py[-1]]:
                        px.append(parent[px[-1]])
                    while depth[py[-1]] > depth[px[-1]]:
                        py.append(parent[py[-1]])
                    while px[-1] != py[-1]:
                        px.append(parent[px[-1]])
                        py.append(parent[py[-1]])
                    cyc = px + py[-2::-1]
                    return [G.vertices[i] for i in cyc]
                parent[y] = x
                depth[y] = depth[x] + 1
                stack.append(y)
    return None


def is_forest(G: Graph) -> bool:
    return G.num_edges == G.n - len(component_masks(G))


def leaf_edges(G: Graph) -> list[tuple[str, str]]:
    """All (leaf, neighbor) pairs with deg(leaf) == 1, in tie-break order."""
    out = []
    for i, row in enumerate(G.adj):
        if popcount(row) == 1:
            out.append((G.vertices[i], G.vertices[row.bit_length() - 1]))
    return out


def find_leaf_edge(G: Graph) -> tuple[tuple[str, str], str] | None:
    """Leaf edge with the smallest leaf index; returns ((leaf, nbr), leaf)."""
    leaves = leaf_edges(G)
    if not leaves:
        return None
    return leaves[0], leaves[0][0]


def clique_count(G: Graph, r: int) -> int:
    if r < 1:
        raise InputError("clique size must be positive")

    def extend(cands: int, need: int) -> int:
        if need == 0:
            return 1
        total = 0
        for i in iter_bits(cands):
            # only larger indices, so each clique is counted once
            total += extend(cands & G.adj[i] & ~((2 << i) - 1), need - 1)
        return total

    return extend(G.all_mask, r)


def _forest_induced_matching(G: Graph) -> int:
    # per rooted subtree: free = v unmatched; down = v matched to a child;
    # up = v matched to its parent (so every child stays unmatched)
    visited = 0
    total = 0
    for root in range(G.n):
        if visited >> root & 1:
            continue
        order, parent = [root], {root: -1}
        visited |= 1 << root
        for x in order:
            for y in iter_bits(G.adj[x] & ~visited):
                visited |= 1 << y
                parent[y] = x
                order.append(y)
        free, down, up = {}, {}, {}
        for x in reversed(order):
            kids = [y for y in iter_bits(G.adj[x]) if parent.get(y) == x]
            base = sum(free[c] for c in kids)
            up[x] = base
            free[x] = sum(max(free[c], down[c]) for c in kids)
            down[x] = max((1 + up[c] + base - free[c] for c in kids), default=-1)
        total += max(free[root], down[root])
    return total


def _branch_induced_matching(G: Graph) -> int:
    edges = G.edge_masks()
    closed = [row | (1 << i) for i, row in enumerate(G.adj)]

    def blocked_by(e: int) -> int:
        m = 0
        for i in iter_bits(e):
            m |= closed[i]
        return m

    blocks = [blocked_by(e) for e in edges]
    best = 0

    def search(k: int, banned: int, count: int, left: int):
        nonlocal best
        if count > best:
            best = count
        if k == len(edges) or count + popcount(left) // 2 <= best:
            return
        e = edges[k]
        if not e & banned:
            # an edge is usable only if none of its endpoints touch a chosen edge
            search(k + 1, banned | blocks[k], count + 1, left & ~blocks[k])
        search(k + 1, banned, count, left)

    # `left` approximates the vertices still coverable; halved it bounds the gain
    search(0, 0, 0, G.all_mask)
    return best


def induced_matching_number(G: Graph, edge_cap: int = 32) -> int:
    """Maximum number of pairwise disconnected edges.

    Forests use an exact tree DP; other graphs an exhaustive branch and bound
    limited to ``edge_cap`` edges.
    """
    if is_forest(G):
        return _forest_induced_matching(G)
    if G.num_edges > edge_cap:
        raise ResourceError(
            f"induced matching search limited to {edge_cap} edges, graph has {G.num_edges}"
        )
    return _branch_induced_matching(G)


# small named families, used by tests, scripts and the CLI examples

def path_graph(n: int, prefix="x") -> Graph:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph.from_edges(zip(names, names[1:]), names)


def cycle_graph(n: int, prefix="x") -> Graph:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph.from_edges(list(zip(names, names[1:])) + [(names[-1], names[0])], names)


def complete_graph(n: int, prefix="x") -> Graph:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph.from_edges(combinations(names, 2), names)


def star_graph(d: int) -> Graph:
    """K_{1,d} with center ``v`` and leaves ``v1..vd``."""
    return Graph.from_edges([("v", f"v{i}") for i in range(1, d + 1)], ["v"])


def edgeless_graph(names: Iterable[str]) -> Graph:
    return Graph.from_edges((), names)
