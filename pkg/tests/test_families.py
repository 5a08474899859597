from srcy import fixtures
from srcy.deformation import first_order_family
from srcy.families import check_first_order_lift
from srcy.fileio import geometry_and_params
from srcy.pfaffian import SkewPolyMatrix, first_order_pfaffians, principal_pfaffians
from srcy.polynomial import PolyRing
from srcy.symmetry import automorphism_group, invariant_specialize, orbit_index_of, orbits_on_t1


def test_all_lifts_match_their_bases(complexes):
    for name in ("p7_1", "p7_2", "p7_3", "p7_4", "p7_5"):
        matrix, ring = fixtures.family_matrix(name)
        _geo, params = geometry_and_params(ring.names)
        result = check_first_order_lift(complexes[name], matrix, params)
        assert result.ok, result.problems
        assert result.sign == 1
        assert len(result.matched) == len(params)


def test_lift_check_rejects_corruption(complexes):
    matrix, ring = fixtures.family_matrix("p7_4")
    _geo, params = geometry_and_params(ring.names)
    upper = dict(matrix.upper)
    upper[(2, 3)] = upper[(2, 3)] + ring.parse("t18*x5")
    bad = SkewPolyMatrix(ring, matrix.dim, upper)
    result = check_first_order_lift(complexes["p7_4"], bad, params)
    assert not result.ok


def test_degree13_orbit_specialization_matches_matrix(complexes):
    k = complexes["p7_4"]
    fam = first_order_family(k)
    part = orbits_on_t1(automorphism_group(k), fam.basis)
    assignment = {
        orbit_index_of(part, fam.basis, (5,), {3, 4, 6}): "s",
        orbit_index_of(part, fam.basis, (6,), {5, 7}): "s",
        orbit_index_of(part, fam.basis, (1, 2), {3, 4, 7}): "s",
    }
    spec = invariant_specialize(fam, part, assignment)
    matrix, _ring = fixtures.family_matrix("degree13_oneparam")
    truncated = [p.truncate_above(["s"], 2) for p in principal_pfaffians(matrix)]
    ours = sorted(str(p.rename(matrix.ring)) for p in spec.generators)
    assert ours == sorted(map(str, truncated))


def test_degree14_orbit_specialization_via_appendix(complexes):
    k = complexes["p7_5"]
    fam = first_order_family(k)
    part = orbits_on_t1(automorphism_group(k), fam.basis)
    block = orbit_index_of(part, fam.basis, (1, 3), {4, 7})
    assert len(part.blocks[block]) == 7
    spec = invariant_specialize(fam, part, {block: "s"})

    full, ring = fixtures.family_matrix("p7_5")
    _geo, params = geometry_and_params(ring.names)
    lift = check_first_order_lift(k, full, params)
    keep = {t for t, idx in lift.matched.items() if idx in set(part.blocks[block])}
    sring = PolyRing([n for n in ring.names if n.startswith("x")] + ["s"])
    entries = {
        key: poly.substitute({t: 0 for t in params if t not in keep}).rename(
            sring, {t: "s" for t in keep})
        for key, poly in full.upper.items()
    }
    spec_matrix = SkewPolyMatrix(sring, full.dim, entries)
    f1 = first_order_pfaffians(spec_matrix, ["s"])
    assert sorted(str(p.rename(sring)) for p in spec.generators) == sorted(
        str(lift.sign * p) for p in f1
    )


def test_printed_degree14_matrix_drops_one_lift_entry(complexes):
    """The printed one-parameter matrix misses the (1,2) = s*x2 entry.

    Restoring it reproduces the orbit specialization; as printed, exactly
    one generator lacks its linear term.
    """
    k = complexes["p7_5"]
    fam = first_order_family(k)
    part = orbits_on_t1(automorphism_group(k), fam.basis)
    block = orbit_index_of(part, fam.basis, (1, 3), {4, 7})
    spec = invariant_specialize(fam, part, {block: "s"})

    printed, ring = fixtures.family_matrix("degree14_oneparam")
    f_printed = [
        p.truncate_above(["s"], 2) for p in principal_pfaffians(printed)
    ]
    ours = sorted(str(p.rename(ring)) for p in spec.generators)
    assert sorted(map(str, f_printed)) != ours
    assert sum(str(p) in ours for p in f_printed) == 6

    upper = dict(printed.upper)
    upper[(1, 2)] = ring.parse("s*x2")
    restored = SkewPolyMatrix(ring, printed.dim, upper)
    f_restored = [
        p.truncate_above(["s"], 2) for p in principal_pfaffians(restored)
    ]
    assert sorted(map(str, f_restored)) == ours
