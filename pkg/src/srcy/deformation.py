"""Degree-zero first-order deformations of Stanley-Reisner 3-spheres.

The contributing pairs are a face `a` and a vertex subset `b` of its link
for which the link decomposes as a join with the boundary of `b`.  In
degree zero, each admissible pair carries one basis element per way of
distributing |b| among the vertices of `a` with positive weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .polynomial import PolyRing
from .simplicial import (
    OTHER,
    SimplicialComplex,
    classify_link,
    is_combinatorial_3sphere_candidate,
)

# Admissible-b counts for the standard small links, before the degree-zero
# multiplicity is applied.  n-gons with n >= 5 contribute nothing.
LINK_CONTRIBUTIONS = {
    "two_points": lambda n: 1,
    "ngon": lambda n: {3: 4, 4: 2}.get(n, 0),
    "boundary_tetrahedron": lambda n: 11,
    "susp_triangle": lambda n: 5,
    "susp_quadrangle": lambda n: 3,
    "susp_ngon": lambda n: 1,
    "cyclic_polytope": lambda n: 1,
}


@dataclass(frozen=True)
class T1BasisElement:
    support: tuple  # sorted vertices of the face a
    a_vector: tuple  # positive exponents, aligned with support
    b: frozenset

    def __post_init__(self):
        if set(self.support) & self.b:
            raise ValueError("a and b must be disjoint")
        if sum(self.a_vector) != len(self.b):
            raise ValueError("degree-zero condition sum(a) = |b| violated")
        if any(e <= 0 for e in self.a_vector):
            raise ValueError("a-vector entries must be positive")

    def sort_key(self):
        return (self.support, tuple(sorted(self.b)), self.a_vector)


# -- join-decomposition test ---------------------------------------------------


def admissible_b(link, b):
    """Whether the subset b of the link's vertices contributes to T^1.

    With L' the full subcomplex on the complementary vertices, demands
    link = L' * boundary(b) with |L'| a sphere when b is not a face, and
    link = (L' * boundary(b)) union (boundary(L') * closure(b)) with |L'|
    a ball when b is a face.
    """
    b = frozenset(b)
    if len(b) < 2:
        raise ValueError("b must have at least two vertices")
    if not b <= set(link.vertices):
        raise ValueError("b must lie in the link's vertex set")
    rest = [v for v in link.vertices if v not in b]
    lprime = link.full_subcomplex(rest) if rest else _void_complex()
    target_dim = link.dim() - len(b) + 1
    bsubsets_proper = _proper_subsets(b)
    if not link.has_face(b):
        if not _is_sphere(lprime, target_dim):
            return False
        joined = {f | g for f in lprime.faces() for g in bsubsets_proper}
        return joined == set(link.faces())
    if not _is_ball(lprime, target_dim):
        return False
    joined = {f | g for f in lprime.faces() for g in bsubsets_proper}
    bdry = _ball_boundary(lprime, target_dim)
    ball_part = {f | g for f in bdry for g in _all_subsets(b)}
    return joined | ball_part == set(link.faces())


def _void_complex():
    return SimplicialComplex([frozenset()])


def _proper_subsets(b):
    b = tuple(sorted(b))
    out = set()
    for k in range(len(b)):
        out.update(frozenset(c) for c in combinations(b, k))
    return out


def _all_subsets(b):
    b = tuple(sorted(b))
    out = set()
    for k in range(len(b) + 1):
        out.update(frozenset(c) for c in combinations(b, k))
    return out


def _is_sphere(c, d):
    """Sphere test for d <= 2 via Euler characteristic and manifold checks."""
    if d == -1:
        return c.facets == frozenset({frozenset()})
    if c.facets == frozenset({frozenset()}):
        return False
    if c.dim() != d or not c.is_pure():
        return False
    if d == 0:
        return len(c.vertices) == 2
    if d == 1:
        return c.is_connected() and c.euler_characteristic() == 0 and all(
            deg == 2 for deg in c.degree_multiset()
        )
    if d == 2:
        return (
            c.is_connected()
            and c.euler_characteristic() == 2
            and all(sum(1 for t in c.facets if e <= t) == 2 for e in c.faces_of_dim(1))
        )
    raise ValueError("sphere test implemented for dimension <= 2 only")


def _is_ball(c, d):
    if c.facets == frozenset({frozenset()}):
        return False
    if c.dim() != d or not c.is_pure():
        return False
    if d == 0:
        return len(c.vertices) == 1
    if d == 1:
        degs = c.degree_multiset()
        return (
            c.is_connected()
            and c.euler_characteristic() == 1
            and max(degs) <= 2
            and degs.count(1) == 2
        )
    if d == 2:
        if not c.is_connected() or c.euler_characteristic() != 1:
            return False
        boundary_edges = []
        for e in c.faces_of_dim(1):
            count = sum(1 for t in c.facets if e <= t)
            if count > 2 or count == 0:
                return False
            if count == 1:
                boundary_edges.append(e)
        if not boundary_edges:
            return False
        rim = SimplicialComplex(boundary_edges)
        return _is_sphere(rim, 1)
    raise ValueError("ball test implemented for dimension <= 2 only")


def _ball_boundary(c, d):
    """Faces of the boundary subcomplex of a d-ball (d <= 2)."""
    if d == 0:
        return {frozenset()}
    ridges = [r for r in c.faces_of_dim(d - 1) if sum(1 for f in c.facets if r <= f) == 1]
    if not ridges:
        return {frozenset()}
    return set(SimplicialComplex(ridges).faces())


# -- enumeration ---------------------------------------------------------------


def degree_zero_multiplicity(asize, bsize):
    """Number of compositions of |b| into |a| positive parts."""
    if asize < 1:
        raise ValueError("a must be a nonempty face")
    if bsize < 2:
        raise ValueError("b must have at least two vertices")
    return comb(bsize - 1, asize - 1)


def _compositions(total, parts):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def admissible_pairs(k):
    """All (face a, subset b) with an admissible join decomposition."""
    pairs = []
    for f in sorted(k.faces(), key=lambda f: (len(f), tuple(sorted(f)))):
        if not f:
            continue
        link = k.link(f)
        lverts = link.vertices
        for size in range(2, len(lverts) + 1):
            for b in combinations(lverts, size):
                if admissible_b(link, frozenset(b)):
                    pairs.append((tuple(sorted(f)), frozenset(b)))
    return pairs


def t1_degree_zero_basis(k, check=True):
    """Canonically ordered basis of the degree-zero first-order deformations."""
    if check:
        report = is_combinatorial_3sphere_candidate(k)
        if not report.ok:
            raise ValueError("complex fails 3-sphere checks: %s" % "; ".join(report.failures))
    basis = []
    for support, b in admissible_pairs(k):
        for avec in _compositions(len(b), len(support)):
            basis.append(T1BasisElement(support, avec, b))
    basis.sort(key=T1BasisElement.sort_key)
    return basis


@dataclass
class CrosscheckRow:
    face: tuple
    link_type: object
    expected: int
    enumerated: int

    @property
    def ok(self):
        return self.expected == self.enumerated


def t1_link_table_crosscheck(k):
    """Compare enumerated admissible-b counts against the standard table.

    Covers faces whose links have dimension <= 2; the counts here are
    before degree-zero multiplicity.
    """
    rows = []
    for f in sorted(k.faces(), key=lambda f: (len(f), tuple(sorted(f)))):
        if not f:
            continue
        link = k.link(f)
        if link.dim() > 2 or link.facets == frozenset({frozenset()}):
            continue
        tag = classify_link(link)
        if tag == OTHER:
            raise ValueError("link of %s does not classify" % sorted(f))
        expected = LINK_CONTRIBUTIONS[tag.tag](tag.n)
        enumerated = sum(
            1
            for size in range(2, len(link.vertices) + 1)
            for b in combinations(link.vertices, size)
            if admissible_b(link, frozenset(b))
        )
        rows.append(CrosscheckRow(tuple(sorted(f)), tag, expected, enumerated))
    return rows


# -- perturbations and first-order family ---------------------------------------


def variable_ring(k, extra=()):
    """Ring with one x-variable per vertex (external labels) plus extras."""
    return PolyRing(["x%d" % v for v in k.vertices] + list(extra))


def perturbation(elem, generators, ring, vertices):
    """Image monomial of each ideal generator under the basis element.

    Generator p (a vertex set) maps to x_p * x^a / x_b when b <= p, and to
    None otherwise.  Exponents stay nonnegative because a and b are
    disjoint.
    """
    out = {}
    avec = dict(zip(elem.support, elem.a_vector))
    for p in generators:
        pset = frozenset(p)
        if not elem.b <= pset:
            out[tuple(sorted(p))] = None
            continue
        exps = [0] * ring.nvars
        for v in pset - elem.b:
            exps[ring.index["x%d" % v]] += 1
        for v, e in avec.items():
            exps[ring.index["x%d" % v]] += e
        out[tuple(sorted(p))] = ring.monomial(exps)
    return out


@dataclass
class FirstOrderFamily:
    ring: PolyRing
    generators: list  # Polys, linear in the parameter variables
    basis: list  # T1BasisElement per parameter
    params: list  # parameter names, aligned with basis

    def at_zero(self):
        """Generators with every parameter set to 0."""
        zeros = {p: 0 for p in self.params}
        return [g.substitute(zeros) for g in self.generators]


def first_order_family(k, check=True):
    """One parameter per basis element; generators x_p + sum_i t_i phi_i(x_p)."""
    from .sr_ideal import minimal_nonfaces

    basis = t1_degree_zero_basis(k, check=check)
    params = ["t%d" % (i + 1) for i in range(len(basis))]
    ring = variable_ring(k, extra=params)
    gens = [g for g in minimal_nonfaces(k).generators]
    polys = []
    for p in gens:
        exps = [0] * ring.nvars
        for v in p:
            exps[ring.index["x%d" % v]] = 1
        polys.append(ring.monomial(exps))
    for i, elem in enumerate(basis):
        images = perturbation(elem, gens, ring, k.vertices)
        t = ring.var(params[i])
        polys = [
            poly + (t * images[p] if images[p] is not None else ring.zero())
            for poly, p in zip(polys, gens)
        ]
    return FirstOrderFamily(ring, polys, basis, params)
