import random

import pytest

from srcy.simplicial import (
    OTHER,
    SimplicialComplex,
    boundary,
    boundary_simplex,
    classify_link,
    closure,
    cyclic_polytope_boundary,
    is_combinatorial_3sphere_candidate,
    join,
    load_triangulation,
    ngon,
    suspension_of_ngon,
)


def test_load_rejects_bad_input():
    with pytest.raises(ValueError):
        load_triangulation("")
    with pytest.raises(ValueError):
        load_triangulation("1 2 3\n1 2 3\n")
    with pytest.raises(ValueError):
        load_triangulation("1 2 3\n1 2\n")
    with pytest.raises(ValueError):
        load_triangulation("1 1 2\n")


def test_single_facet_is_full_simplex():
    k = load_triangulation("0 1 2 3 4\n")
    assert len(k.facets) == 1
    assert k.dim() == 4


def test_link_at_empty_face(complexes):
    k = complexes["p7_1"]
    assert k.link(frozenset()) == k


def test_link_errors_on_nonface(complexes):
    with pytest.raises(ValueError):
        complexes["p7_3"].link({6, 7})


def test_link_vertex_set_is_restricted():
    k = load_triangulation("1 2\n2 3\n")
    lk = k.link({2})
    assert set(lk.vertices) == {1, 3}


def test_join_boundary_closure():
    susp = join(SimplicialComplex([{10}, {11}]), ngon(3, [1, 2, 3]))
    assert len(susp.facets) == 6
    tetra = boundary(frozenset({0, 1, 2, 3}))
    assert len(tetra.facets) == 4
    assert closure({1, 2}).faces() == frozenset(
        {frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})}
    )
    octa = join(SimplicialComplex([{8}, {9}]), SimplicialComplex([{1}, {3}]),
                SimplicialComplex([{2}, {4}]))
    assert len(octa.facets) == 8
    assert classify_link(octa).tag == "susp_quadrangle"


def test_join_requires_disjoint_vertices():
    with pytest.raises(ValueError):
        join(SimplicialComplex([{1}]), SimplicialComplex([{1}, {2}]))


def test_join_associates_up_to_iso():
    a = SimplicialComplex([{1}, {2}])
    b = SimplicialComplex([{3}, {4}])
    c = SimplicialComplex([{5}, {6}])
    assert join(join(a, b), c) == join(a, join(b, c))


def test_f_vectors(complexes):
    assert complexes["p7_5"].f_vector().counts == (1, 7, 21, 28, 14)
    assert complexes["delta4"].f_vector().counts == (1, 5, 10, 10, 5)
    for k in complexes.values():
        assert k.euler_characteristic() == 0
        for v in k.vertices:
            assert k.link({v}).euler_characteristic() == 2


def test_classify_links_of_fixtures(complexes):
    k1 = complexes["p7_1"]
    assert classify_link(k1.link({1})).tag == "cyclic_polytope"
    assert classify_link(k1.link({1})).n == 6
    assert classify_link(k1.link({4})).tag == "boundary_tetrahedron"
    assert classify_link(k1.link({5})).tag == "susp_triangle"
    assert classify_link(complexes["p7_3"].link({1})).tag == "susp_quadrangle"
    assert classify_link(ngon(4, [1, 2, 3, 4])) .tag == "ngon"


def test_classify_edge_links_are_ngons(complexes):
    for k in complexes.values():
        for e in k.faces_of_dim(1):
            assert classify_link(k.link(e)).tag == "ngon"


def test_classification_distinguishes_six_vertex_spheres():
    assert classify_link(suspension_of_ngon(4)).tag == "susp_quadrangle"
    assert classify_link(cyclic_polytope_boundary(6)).tag == "cyclic_polytope"
    assert classify_link(boundary_simplex(3)).tag == "boundary_tetrahedron"
    assert classify_link(SimplicialComplex([{1, 2}, {2, 3}])) == OTHER


def test_classify_link_relabeling_invariant(complexes):
    rng = random.Random(7)
    samples = []
    for k in complexes.values():
        for v in list(k.vertices)[:3]:
            samples.append(k.link({v}))
        samples.append(k.link(next(iter(k.faces_of_dim(1)))))
    for link in samples:
        tag = classify_link(link)
        for _ in range(4):
            perm = list(link.vertices)
            rng.shuffle(perm)
            relabeled = link.relabel(dict(zip(link.vertices, perm)))
            assert classify_link(relabeled) == tag


def test_links_are_valid_complexes(complexes):
    k = complexes["p7_2"]
    for f in k.faces():
        lk = k.link(f)
        for face in lk.faces():
            assert lk.has_face(face)


def test_sphere_candidate_checks(complexes):
    for k in complexes.values():
        assert is_combinatorial_3sphere_candidate(k).ok
    solid = load_triangulation("0 1 2 3 4\n")
    report = is_combinatorial_3sphere_candidate(solid)
    assert not report.ok
    assert report.failures


def test_isomorphism_finds_maps():
    a = cyclic_polytope_boundary(7)
    relabel = {v: 10 + v for v in a.vertices}
    assert a.is_isomorphic(a.relabel(relabel))
    assert not a.is_isomorphic(suspension_of_ngon(5))
