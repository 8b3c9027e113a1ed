import itertools

import pytest
from hypothesis import given, settings, strategies as st

from bettisplit.complex import SimplicialComplex, omega, reduced_conn, remove_facet
from bettisplit.corpus import random_simplicial_forest
from bettisplit.errors import PreconditionError
from bettisplit.graph import complete_graph, cycle_graph, delete_vertices, star_graph
from bettisplit.ideal import MonomialIdeal, add, edge_ideal, facet_ideal, intersect, principal, scale
from bettisplit.oracle import betti_oracle
from bettisplit.splitting import (
    check_edge_split,
    check_facet_split,
    check_vertex_split,
    edge_splitting_data,
    is_splitting_edge,
    is_splitting_facet,
    is_splitting_vertex,
    make_edge_split,
    make_facet_split,
    make_vertex_split,
    vertex_splitting_data,
    verify_splitting,
)

from conftest import graph
from test_graph import graphs


def I(*terms):
    return MonomialIdeal.from_supports([tuple(t) for t in terms])


def cx(*facets):
    return SimplicialComplex.from_facets([f.split(",") if "," in f else list(f) for f in facets])


def ek_holds(Iall, J, K):
    lhs = betti_oracle(Iall)
    rhs = betti_oracle(J) + betti_oracle(K) + betti_oracle(intersect(J, K)).shift(1, 0)
    return lhs == rhs


class TestEdges:
    def test_criterion(self, example):
        assert not is_splitting_edge(example, ("x2", "x4"))
        assert is_splitting_edge(example, ("x1", "x2"))
        assert all(is_splitting_edge(complete_graph(3), e) for e in complete_graph(3).edges())

    def test_make_edge_split(self, example):
        s = make_edge_split(graph("ab bc cd"), ("a", "b"))
        assert s.n == 1 and s.H.vertices == ("d",) and s.H.num_edges == 0
        s = make_edge_split(example, ("x1", "x2"))
        assert s.n == 2 and set(s.H.vertices) == {"x5", "x6"} and s.H.num_edges == 0
        s = make_edge_split(graph("uv"), ("u", "v"))
        assert s.n == 0 and s.H.n == 0

    def test_refuses_non_splitting_edge(self, example):
        with pytest.raises(PreconditionError, match="x2x4 is not a splitting edge"):
            make_edge_split(example, ("x2", "x4"))

    def test_verifier_rejects_example_edge(self, example):
        v = check_edge_split(example, ("x2", "x4"))
        assert not v.verified and v.method == "exhaustive"
        assert "no splitting function exists" in v.reason
        assert sorted(v.witness) == [("x1", "x2", "x4"), ("x2", "x4", "x5")]

    def test_verifier_accepts_leaf_edges(self, example):
        assert check_edge_split(example, ("x1", "x2")).verified
        assert check_edge_split(graph("ab bc"), ("a", "b")).verified


class TestVertices:
    def test_criterion(self):
        assert not is_splitting_vertex(star_graph(4), "v")
        assert is_splitting_vertex(graph("ab bc"), "a")
        assert not is_splitting_vertex(graph("ab", isolated="z"), "z")

    def test_p3(self):
        s = make_vertex_split(graph("ab bc"), "a")
        assert s.neighbors == ("b",)
        assert s.G_of_v.edges() == [("b", "c")]
        assert s.G_i[0].num_edges == 0
        assert s.L == I("abc") == intersect(I("ab"), I("bc"))

    def test_c4(self):
        G = graph("ab bc cd da")
        s = make_vertex_split(G, "a")
        assert set(s.neighbors) == {"b", "d"}
        assert {frozenset(e) for e in s.G_of_v.edges()} == {frozenset("bc"), frozenset("cd")}
        assert all(g.num_edges == 0 for g in s.G_i)
        assert s.L == scale(I("bc", "cd"), "a")
        d = vertex_splitting_data(G, "a")
        assert s.L == intersect(d.J, d.K)

    def test_c5(self):
        G = graph("ab bc cd de ea")
        s = make_vertex_split(G, "a")
        assert {frozenset(e) for e in s.G_of_v.edges()} == {frozenset("bc"), frozenset("de")}
        assert [g.vertices for g in s.G_i] == [("d",), ("c",)]
        assert s.L == scale(I("bc", "de"), "a")

    def test_refuses_star_center(self):
        with pytest.raises(PreconditionError):
            make_vertex_split(star_graph(3), "v")

    def test_verifier(self):
        for G in (cycle_graph(5), complete_graph(4), graph("ab bc")):
            for v in G.vertices:
                if is_splitting_vertex(G, v):
                    assert check_vertex_split(G, v).verified


class TestFacets:
    def test_leaf_split(self):
        D = cx("1,2,3", "3,4,5")
        assert is_splitting_facet(D, ("1", "2", "3"))
        s = make_facet_split(D, ("1", "2", "3"))
        assert s.conn_bar.facet_names() == [("4", "5")] and s.omega.facets == ()
        assert check_facet_split(D, ("1", "2", "3")).verified

    def test_non_leaf_refused(self):
        D = cx("ab", "bc", "ca")
        assert not is_splitting_facet(D, "ab")
        with pytest.raises(PreconditionError, match="not a leaf"):
            make_facet_split(D, "ab")

    def test_isolated_component(self):
        D = cx("12", "23", "45")
        s = make_facet_split(D, "45")
        assert s.conn_bar.facets == ()
        assert sorted(s.omega.facet_names()) == [("1", "2"), ("2", "3")]


class TestVerifier:
    def test_p3(self):
        assert verify_splitting(I("ab", "bc"), I("ab"), I("bc"),
                                {0b111: 0b011}, {0b111: 0b110}).verified

    def test_disjointness(self):
        v = verify_splitting(I("ab", "bc"), I("ab", "bc"), I("bc"))
        assert not v.verified and "disjoint" in v.reason

    def test_condition_a(self):
        v = verify_splitting(I("ab", "bc"), I("ab"), I("bc"), {0b111: 0b011}, {0b111: 0b011})
        assert not v.verified

    def test_certificate_agrees_with_exhaustive(self):
        for G in (star_graph(6), cycle_graph(7), complete_graph(5)):
            for e in G.edges():
                if not is_splitting_edge(G, e):
                    continue
                d = edge_splitting_data(G, e)
                full = verify_splitting(d.I, d.J, d.K, d.phi, d.psi, subset_cap=20)
                cert = verify_splitting(d.I, d.J, d.K, d.phi, d.psi, subset_cap=0)
                assert full.verified and cert.verified and cert.method == "certificate"
            for v in G.vertices:
                if is_splitting_vertex(G, v):
                    d = vertex_splitting_data(G, v)
                    assert verify_splitting(d.I, d.J, d.K, d.phi, d.psi, subset_cap=0).verified


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_eliahou_kervaire_on_splitting_edges_and_vertices(G):
    for e in G.edges():
        if is_splitting_edge(G, e):
            d = edge_splitting_data(G, e)
            assert ek_holds(d.I, d.J, d.K)
            # a lone edge leaves K = 0, which is not a splitting
            assert check_edge_split(G, e).verified == (G.num_edges > 1)
    for v in G.vertices:
        if is_splitting_vertex(G, v):
            s = make_vertex_split(G, v)
            d = vertex_splitting_data(G, v)
            assert s.L == intersect(d.J, d.K)
            assert ek_holds(d.I, d.J, d.K)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_intersection_shape_for_facets(rng):
    D = random_simplicial_forest(rng)
    for F in D.facets:
        names = D.names_of(F)
        rest = facet_ideal(remove_facet(D, F))
        shape = scale(add(facet_ideal(reduced_conn(D, F)), facet_ideal(omega(D, F))), names)
        assert shape == intersect(principal(names), rest)
        if is_splitting_facet(D, F) and len(D.facets) > 1:
            assert check_facet_split(D, F).verified
            assert ek_holds(facet_ideal(D), principal(names), rest)


def test_intersection_shape_on_every_facet_of_small_complexes():
    # all complexes with up to four facets drawn from the subsets of a 4-set
    subsets = [m for m in range(1, 16)]
    seen = 0
    for r in range(1, 5):
        for combo in itertools.combinations(subsets, r):
            if any(a & b in (a, b) for a, b in itertools.combinations(combo, 2)):
                continue
            D = SimplicialComplex(("a", "b", "c", "d"), combo)
            for F in D.facets:
                names = D.names_of(F)
                shape = scale(add(facet_ideal(reduced_conn(D, F)), facet_ideal(omega(D, F))), names)
                assert shape == intersect(principal(names), facet_ideal(remove_facet(D, F)))
            seen += 1
    assert seen > 100
