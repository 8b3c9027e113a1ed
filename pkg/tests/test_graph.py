import itertools

import pytest
from hypothesis import given, settings, strategies as st

from bettisplit.corpus import random_forest
from bettisplit.errors import InputError, ResourceError
from bettisplit.graph import (
    Graph,
    clique_count,
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    delete_edge,
    delete_vertices,
    edgeless_graph,
    find_cycle,
    find_induced_c4,
    find_leaf_edge,
    induced_matching_number,
    induced_subgraph,
    is_chordal,
    is_forest,
    neighbors,
    path_graph,
    shortest_hole,
    shortest_minimal_cycle,
    star_graph,
)

from conftest import graph


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges([(f"v{a}", f"v{b}") for a, b in chosen], vertices=[f"v{k}" for k in range(n)])


def edge_set(G):
    return {frozenset(e) for e in G.edges()}


def brute_induced_matching(G):
    edges = G.edge_masks()
    best = 0
    for r in range(1, len(edges) + 1):
        found = False
        for combo in itertools.combinations(edges, r):
            union = 0
            ok = True
            for e in combo:
                if union & e:
                    ok = False
                    break
                union |= e
            if not ok:
                continue
            # no edge of G may join two chosen edges
            if all(bin(union & e).count("1") < 2 or e in combo for e in edges):
                found = True
                break
        if not found:
            break
        best = r
    return best


class TestConstruction:
    def test_rejects_loop(self):
        with pytest.raises(InputError):
            Graph.from_edges([("a", "a")])

    def test_rejects_asymmetric(self):
        with pytest.raises(InputError):
            Graph(("a", "b"), (0b10, 0))

    def test_rejects_duplicate_names(self):
        with pytest.raises(InputError):
            Graph(("a", "a"), (0, 0))

    def test_isolated_vertices_kept(self):
        G = graph("ab", isolated="c")
        assert G.vertices == ("c", "a", "b")
        assert neighbors(G, "c") == frozenset()

    def test_vertex_cap(self):
        vs = [f"v{k}" for k in range(65)]
        with pytest.raises(ResourceError):
            Graph.from_edges([], vertices=vs)
        assert Graph.from_edges([], vertices=vs, wide=True).n == 65

    def test_unknown_vertex(self):
        with pytest.raises(InputError, match="zz"):
            neighbors(graph("ab"), "zz")


class TestOperations:
    def test_neighbors(self, example):
        assert neighbors(star_graph(3), "v") == {"v1", "v2", "v3"}
        assert neighbors(example, "x2") == {"x1", "x3", "x4"}

    def test_delete_edge(self, example):
        H = delete_edge(example, ("x2", "x4"))
        assert edge_set(H) == {frozenset(e) for e in [("x1", "x2"), ("x2", "x3"), ("x4", "x5"), ("x4", "x6")]}
        assert len([c for c in connected_components(H) if c.num_edges]) == 2
        single = delete_edge(graph("uv"), ("u", "v"))
        assert single.vertices == ("u", "v") and single.num_edges == 0
        P4 = delete_edge(graph("ab bc cd"), ("a", "b"))
        assert edge_set(P4) == {frozenset("bc"), frozenset("cd")} and "a" in P4.vertices

    def test_delete_edge_rejects_non_edge(self):
        with pytest.raises(InputError):
            delete_edge(graph("ab bc"), ("a", "c"))

    def test_delete_vertices(self, example):
        assert delete_vertices(graph("ab bc"), ["b"]).edges() == []
        assert delete_vertices(example, [f"x{k}" for k in range(1, 7)]).n == 0
        assert delete_vertices(example, []) == example
        with pytest.raises(InputError):
            delete_vertices(example, ["nope"])

    def test_induced_subgraph(self, example):
        assert clique_count(induced_subgraph(complete_graph(4), ["x1", "x2", "x3"]), 3) == 1
        C5 = cycle_graph(5)
        assert edge_set(induced_subgraph(C5, ["x1", "x2", "x3"])) == {frozenset(("x1", "x2")), frozenset(("x2", "x3"))}
        assert edge_set(induced_subgraph(example, ["x2", "x4", "x5"])) == {frozenset(("x2", "x4")), frozenset(("x4", "x5"))}

    def test_complement(self):
        assert complement(complete_graph(5)).num_edges == 0
        C5 = graph("ab bc cd de ea")
        assert shortest_minimal_cycle(complement(C5)) == 5
        assert edge_set(complement(graph("ab bc cd da"))) == {frozenset("ac"), frozenset("bd")}


class TestCycles:
    @pytest.mark.parametrize("G,chordal", [(complete_graph(4), True), (cycle_graph(4), False), (cycle_graph(5), False)])
    def test_is_chordal(self, G, chordal):
        assert is_chordal(G) is chordal

    @pytest.mark.parametrize("G,length", [(cycle_graph(4), 4), (cycle_graph(6), 6), (complete_graph(4), None)])
    def test_shortest_minimal_cycle(self, G, length):
        assert shortest_minimal_cycle(G) == length

    def test_hole_is_induced(self):
        G = graph("ab bc cd de ea ac")  # C5 plus chord ac leaves the hole acde
        hole = shortest_hole(G)
        assert len(hole) == 4 and set(hole) == set("acde")

    def test_find_induced_c4(self):
        assert find_induced_c4(cycle_graph(5)) is None
        assert set(find_induced_c4(graph("ab bc cd da"))) == set("abcd")
        assert find_induced_c4(complete_graph(4)) is None

    def test_find_cycle(self):
        assert find_cycle(path_graph(5)) is None
        cyc = find_cycle(graph("ab bc ca cd"))
        assert set(cyc) == set("abc")


class TestForests:
    def test_forest_and_leaf(self, example):
        assert is_forest(example)
        assert find_leaf_edge(example) == (("x1", "x2"), "x1")
        assert not is_forest(cycle_graph(4))
        assert find_leaf_edge(graph("uv")) == (("u", "v"), "u")

    def test_components(self, example):
        assert len(connected_components(example)) == 1
        assert len(connected_components(edgeless_graph("abcd"))) == 4


class TestCounts:
    @pytest.mark.parametrize("G,r,k", [(complete_graph(4), 3, 4), (complete_graph(3), 2, 3), (cycle_graph(5), 3, 0)])
    def test_clique_count(self, G, r, k):
        assert clique_count(G, r) == k

    def test_induced_matching_examples(self, example, example_minus):
        assert induced_matching_number(example) == 1
        assert induced_matching_number(example_minus) == 2
        assert induced_matching_number(graph("ab cd")) == 2

    def test_induced_matching_cap(self):
        with pytest.raises(ResourceError):
            induced_matching_number(complete_graph(9))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_graph_invariants(G):
    assert complement(complement(G)) == G
    assert delete_vertices(G, []) == G
    assert induced_subgraph(G, G.vertices) == G
    assert clique_count(G, 2) == G.num_edges
    assert sum(G.degree(v) for v in G.vertices) == 2 * clique_count(G, 2)
    assert clique_count(G, 1) == G.n
    for i, row in enumerate(G.adj):
        assert not row >> i & 1
    # chordality from elimination order agrees with the hole search
    assert is_chordal(G) == (shortest_minimal_cycle(G) is None)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_induced_matching_matches_brute_force(G):
    assert induced_matching_number(G) == brute_induced_matching(G) <= G.num_edges


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_forest_dp_matches_brute_force(rng):
    G = random_forest(rng, 10)
    assert is_forest(G)
    assert induced_matching_number(G) == brute_induced_matching(G)
