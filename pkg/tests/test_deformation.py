import random

import pytest

from srcy.deformation import (
    admissible_b,
    degree_zero_multiplicity,
    first_order_family,
    perturbation,
    t1_degree_zero_basis,
    t1_link_table_crosscheck,
    variable_ring,
)
from srcy.simplicial import boundary_simplex, ngon, suspension_of_ngon
from srcy.sr_ideal import minimal_nonfaces

T1_DIMS = {"delta4": 105, "p7_1": 92, "p7_2": 79, "p7_3": 79, "p7_4": 67, "p7_5": 56}


def test_admissible_b_on_cycles():
    e4 = ngon(4, [1, 2, 3, 4])
    assert admissible_b(e4, {1, 3})
    assert admissible_b(e4, {2, 4})
    assert not admissible_b(e4, {1, 2})
    e3 = ngon(3, [1, 2, 3])
    assert sum(admissible_b(e3, set(b)) for b in [(1, 2), (1, 3), (2, 3), (1, 2, 3)]) == 4
    e5 = ngon(5, [1, 2, 3, 4, 5])
    from itertools import combinations

    assert not any(admissible_b(e5, set(b)) for r in (2, 3, 4, 5)
                   for b in combinations([1, 2, 3, 4, 5], r))


def test_admissible_b_counts_on_two_spheres():
    from itertools import combinations

    def count(link):
        return sum(
            admissible_b(link, set(b))
            for r in range(2, len(link.vertices) + 1)
            for b in combinations(link.vertices, r)
        )

    assert count(boundary_simplex(3)) == 11
    assert count(suspension_of_ngon(3)) == 5
    assert count(suspension_of_ngon(4)) == 3
    assert count(suspension_of_ngon(5)) == 1
    assert count(suspension_of_ngon(6)) == 1


def test_admissible_b_validates_input():
    e4 = ngon(4, [1, 2, 3, 4])
    with pytest.raises(ValueError):
        admissible_b(e4, {1})
    with pytest.raises(ValueError):
        admissible_b(e4, {1, 9})


def test_admissible_b_relabeling_invariant():
    rng = random.Random(3)
    links = [boundary_simplex(3), suspension_of_ngon(4), ngon(5, [1, 2, 3, 4, 5])]
    from itertools import combinations

    for link in links:
        for b in combinations(link.vertices, 2):
            value = admissible_b(link, set(b))
            perm = list(link.vertices)
            rng.shuffle(perm)
            mapping = dict(zip(link.vertices, perm))
            relabeled = link.relabel(mapping)
            assert admissible_b(relabeled, {mapping[v] for v in b}) == value


def test_degree_zero_multiplicity():
    assert degree_zero_multiplicity(2, 3) == 2
    assert degree_zero_multiplicity(1, 5) == 1
    assert degree_zero_multiplicity(3, 2) == 0
    with pytest.raises(ValueError):
        degree_zero_multiplicity(0, 2)


def test_t1_dimensions(complexes):
    for name, k in complexes.items():
        assert len(t1_degree_zero_basis(k)) == T1_DIMS[name]


def test_t1_weighted_sum_identity(complexes):
    from math import comb

    for name, k in complexes.items():
        from srcy.deformation import admissible_pairs

        total = sum(comb(len(b) - 1, len(a) - 1) for a, b in admissible_pairs(k))
        assert total == T1_DIMS[name]


def test_no_contribution_from_two_faces(complexes):
    for k in complexes.values():
        two_faces = {tuple(sorted(f)) for f in k.faces_of_dim(2)}
        for elem in t1_degree_zero_basis(k):
            assert elem.support not in two_faces


def test_link_table_crosscheck(complexes):
    for k in complexes.values():
        rows = t1_link_table_crosscheck(k)
        assert rows and all(r.ok for r in rows)


def test_crosscheck_includes_triangle_count_four(complexes):
    rows = t1_link_table_crosscheck(complexes["delta4"])
    triangle_rows = [r for r in rows if r.link_type.tag == "ngon" and r.link_type.n == 3]
    assert triangle_rows and all(r.expected == 4 for r in triangle_rows)


def test_perturbation_examples(complexes):
    k = complexes["p7_1"]
    ring = variable_ring(k)
    gens = minimal_nonfaces(k).generators
    basis = t1_degree_zero_basis(k)
    elem = next(e for e in basis if e.support == (1,) and e.b == frozenset({2, 3}))
    images = perturbation(elem, gens, ring, k.vertices)
    assert str(images[(1, 2, 3, 6)]) == "x1^3*x6"
    assert str(images[(1, 2, 3, 5)]) == "x1^3*x5"
    assert images[(4, 6)] is None

    quintic = complexes["delta4"]
    qring = variable_ring(quintic)
    qgens = minimal_nonfaces(quintic).generators
    qelem = next(
        e for e in t1_degree_zero_basis(quintic)
        if e.support == (0,) and e.b == frozenset({1, 2, 3, 4})
    )
    qimages = perturbation(qelem, qgens, qring, quintic.vertices)
    assert str(qimages[(0, 1, 2, 3, 4)]) == "x0^5"


def test_first_order_family_structure(complexes):
    k = complexes["p7_5"]
    fam = first_order_family(k)
    assert len(fam.params) == 56
    base = fam.at_zero()
    gens = minimal_nonfaces(k).generators
    assert len(base) == len(gens)
    for poly, g in zip(base, gens):
        assert len(poly.terms) == 1
    # every parameter appears linearly and preserves x-degree
    for poly, g in zip(fam.generators, gens):
        for t in fam.params:
            coeff = poly.coefficient_of(t, 1)
            if not coeff.is_zero():
                assert coeff.total_degree() == len(g)
        assert poly.truncate_above(fam.params, 2) == poly
