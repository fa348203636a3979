"""Simplicial complexes, facet parsing, clique complexes."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from simposets import (
    FormatError,
    SimplicialComplex,
    StructureError,
    clique_complex,
    make_complex,
    make_graph,
    parse_facet_string,
)
from simposets.labels import Label

from conftest import random_complex
from oracles import brute_faces, brute_maximal_cliques, brute_minimal_nonfaces

small_complexes = st.integers(0, 10_000).map(
    lambda s: random_complex(random.Random(s), max_vertices=7, max_facets=5)
)

vertex_pool = [f"v{i}" for i in range(1, 9)]
small_graphs = st.sets(
    st.sampled_from([tuple(e) for e in combinations(vertex_pool[:6], 2)]), max_size=10
).map(lambda es: make_graph(vertex_pool[:6], es))


def test_make_complex_absorbs_contained_facets():
    c = make_complex(["a", "b", "c"], [("a", "b", "c"), ("b", "c"), ("a",)])
    assert [sorted(f) for f in c.facets] == [["a", "b", "c"]]


def test_make_complex_adds_isolated_vertices_as_points():
    c = make_complex(["a", "b", "c", "z"], [("a", "b", "c")])
    assert ("z",) in c.facets
    assert c.is_face(("z",))


def test_make_complex_validation():
    with pytest.raises(StructureError, match="unknown vertex"):
        make_complex(["a"], [("a", "b")])
    with pytest.raises(StructureError, match="unique"):
        make_complex(["a", "a"], [])
    with pytest.raises(FormatError):
        make_complex(["a", "b*c"], [])


def test_parse_facet_string():
    c = parse_facet_string("a*b*c,b*c*d")
    assert c.vertices == ("a", "b", "c", "d")
    assert [sorted(f) for f in c.facets] == [["a", "b", "c"], ["b", "c", "d"]]
    with pytest.raises(FormatError):
        parse_facet_string("")


def test_faces_of_two_triangles():
    c = parse_facet_string("a*b*c,b*c*d")
    faces = c.faces()
    assert len(faces) == 12  # brute-force count over both triangles, incl. empty
    assert faces[0] == ()
    assert set(map(frozenset, faces)) == brute_faces(c.facets)


def test_is_face():
    c = parse_facet_string("a*b*c,b*c*d")
    assert c.is_face(())
    assert c.is_face(("c", "b"))
    assert not c.is_face(("a", "d"))


def test_minimal_nonfaces_examples():
    assert parse_facet_string("a*b*c,b*c*d").minimal_nonfaces() == [("a", "d")]
    assert parse_facet_string("a*b*c").minimal_nonfaces() == []
    assert parse_facet_string("a*b,b*c,a*c").minimal_nonfaces() == [("a", "b", "c")]


@settings(max_examples=60, deadline=None)
@given(small_complexes)
def test_minimal_nonfaces_match_oracle(c):
    got = [frozenset(m) for m in c.minimal_nonfaces()]
    assert got == brute_minimal_nonfaces(c.vertices, c.facets)


@settings(max_examples=60, deadline=None)
@given(small_complexes)
def test_faces_match_oracle(c):
    faces = c.faces()
    assert len(set(faces)) == len(faces)
    assert set(map(frozenset, faces)) == brute_faces(c.facets)
    assert all(c.is_face(f) for f in faces)


@settings(max_examples=60, deadline=None)
@given(small_complexes)
def test_face_poset_elements_are_faces(c):
    p = c.face_poset()
    assert p.is_face_poset()
    assert len(p) == len(c.faces())
    atoms = {a.single_vertex_name() for a in p.atoms()}
    assert atoms == set(c.vertices)


def test_face_poset_order_is_containment():
    p = parse_facet_string("a*b*c").face_poset()
    L = Label.parse
    assert p.leq(L("a"), L("a*b"))
    assert p.leq(Label.bottom(), L("a*b*c"))
    assert not p.leq(L("a*b"), L("b*c"))


def test_graph_validation():
    with pytest.raises(StructureError, match="unknown vertex"):
        make_graph(["a"], [("a", "b")])
    with pytest.raises(StructureError, match="loop"):
        make_graph(["a"], [("a", "a")])


def test_clique_complex_triangle_plus_edge():
    g = make_graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])
    c = clique_complex(g)
    assert {frozenset(f) for f in c.facets} == {
        frozenset("abc"),
        frozenset("cd"),
    }


def test_clique_complex_keeps_isolated_vertices():
    g = make_graph(["a", "b"], [])
    c = clique_complex(g)
    assert {frozenset(f) for f in c.facets} == {frozenset("a"), frozenset("b")}


@settings(max_examples=60, deadline=None)
@given(small_graphs)
def test_clique_complex_matches_brute_cliques(g):
    c = clique_complex(g)
    assert {frozenset(f) for f in c.facets} == brute_maximal_cliques(g.vertices, g.edges)


@settings(max_examples=40, deadline=None)
@given(small_complexes)
def test_complex_json_round_trip(c):
    again = SimplicialComplex.from_json(c.to_json())
    assert again == c
    assert again.to_json() == c.to_json()


def test_complex_json_rejects_bad_shapes():
    with pytest.raises(FormatError):
        SimplicialComplex.from_json_dict({"vertices": ["a"]})
    with pytest.raises(FormatError):
        SimplicialComplex.from_json_dict({"vertices": "a", "facets": []})


def test_facets_are_listed_deterministically():
    c1 = make_complex(["a", "b", "c"], [("c", "b"), ("a", "b")])
    c2 = make_complex(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert c1 == c2
    assert c1.facets == (("a", "b"), ("b", "c"))
