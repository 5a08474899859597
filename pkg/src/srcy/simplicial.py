"""Simplicial complexes on small labeled vertex sets.

A complex is stored by its facets (inclusion-maximal faces); lower faces
are enumerated on demand and cached.  Vertices keep their external integer
labels throughout, so facet lists round-trip byte-for-byte through the
triangulation file format.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations


class SimplicialComplex:

    def __init__(self, facets):
        fs = {frozenset(f) for f in facets}
        if not fs:
            fs = {frozenset()}
        maximal = {f for f in fs if not any(f < g for g in fs)}
        if len(maximal) != len(fs):
            raise ValueError("facet list contains a face of another facet")
        self.facets = frozenset(maximal)
        self.vertices = tuple(sorted(set().union(*self.facets))) if self.facets else ()
        self._faces = None

    @classmethod
    def from_faces(cls, faces):
        """Build from an arbitrary face collection (reduces to maximal)."""
        fs = [frozenset(f) for f in faces]
        maximal = [f for f in fs if not any(f < g for g in fs)]
        return cls(maximal if maximal else [frozenset()])

    # -- face structure ----------------------------------------------------

    def faces(self):
        if self._faces is None:
            out = set()
            for f in self.facets:
                f = tuple(sorted(f))
                for k in range(len(f) + 1):
                    out.update(map(frozenset, combinations(f, k)))
            self._faces = frozenset(out)
        return self._faces

    def has_face(self, f):
        f = frozenset(f)
        return any(f <= g for g in self.facets)

    def dim(self):
        return max(len(f) for f in self.facets) - 1

    def is_pure(self):
        d = self.dim()
        return all(len(f) == d + 1 for f in self.facets)

    def faces_of_dim(self, d):
        return [f for f in self.faces() if len(f) == d + 1]

    def f_vector(self):
        counts = {}
        for f in self.faces():
            counts[len(f)] = counts.get(len(f), 0) + 1
        return FVector(tuple(counts.get(k, 0) for k in range(self.dim() + 2)))

    def euler_characteristic(self):
        return self.f_vector().euler_characteristic()

    def vertex_degree(self, v):
        """Number of edges at v."""
        return sum(1 for f in self.faces_of_dim(1) if v in f)

    def degree_multiset(self):
        return tuple(sorted(self.vertex_degree(v) for v in self.vertices))

    def is_connected(self):
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        edges = self.faces_of_dim(1)
        while frontier:
            v = frontier.pop()
            for e in edges:
                if v in e:
                    (w,) = e - {v}
                    if w not in seen:
                        seen.add(w)
                        frontier.append(w)
        return len(seen) == len(self.vertices)

    # -- constructions -------------------------------------------------------

    def link(self, f):
        f = frozenset(f)
        if not self.has_face(f):
            raise ValueError("%s is not a face of the complex" % sorted(f))
        facets = {g - f for g in self.facets if f <= g}
        return SimplicialComplex(facets)

    def full_subcomplex(self, vertices):
        vs = frozenset(vertices)
        return SimplicialComplex.from_faces(f & vs for f in self.facets)

    def relabel(self, mapping):
        return SimplicialComplex({frozenset(mapping[v] for v in f) for f in self.facets})

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        face_strs = sorted("".join(map(str, sorted(f))) for f in self.facets)
        return "SimplicialComplex{%s}" % ", ".join(face_strs)

    # -- isomorphism ---------------------------------------------------------

    def find_isomorphism(self, other):
        """A vertex bijection carrying facets to facets, or None.

        Backtracking over degree-compatible assignments; the complexes in
        this package never exceed 8 vertices.
        """
        if len(self.vertices) != len(other.vertices):
            return None
        if sorted(map(len, self.facets)) != sorted(map(len, other.facets)):
            return None
        if self.degree_multiset() != other.degree_multiset():
            return None
        mine = sorted(self.vertices, key=lambda v: (self.vertex_degree(v), v))
        deg_o = {v: other.vertex_degree(v) for v in other.vertices}

        target_facets = other.facets

        def extend(i, mapping, used):
            if i == len(mine):
                image = {frozenset(mapping[v] for v in f) for f in self.facets}
                return dict(mapping) if image == target_facets else None
            v = mine[i]
            for w in other.vertices:
                if w in used or deg_o[w] != self.vertex_degree(v):
                    continue
                mapping[v] = w
                used.add(w)
                found = extend(i + 1, mapping, used)
                if found:
                    return found
                del mapping[v]
                used.discard(w)
            return None

        return extend(0, {}, set())

    def is_isomorphic(self, other):
        return self.find_isomorphism(other) is not None


@dataclass(frozen=True)
class FVector:
    """Face counts (f_-1, f_0, ..., f_d) with f_-1 = 1 for the empty face."""

    counts: tuple

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1:
            raise ValueError("f-vector must start with f_-1 = 1")

    def euler_characteristic(self):
        return sum((-1) ** i * c for i, c in enumerate(self.counts[1:]))

    def __iter__(self):
        return iter(self.counts)


# -- basic constructions -----------------------------------------------------


def closure(face):
    return SimplicialComplex([frozenset(face)])


def boundary(face):
    face = tuple(sorted(frozenset(face)))
    if not face:
        raise ValueError("the empty face has no boundary complex")
    return SimplicialComplex(map(frozenset, combinations(face, len(face) - 1)))


def join(*complexes):
    out = None
    for comp in complexes:
        if not isinstance(comp, SimplicialComplex):
            comp = SimplicialComplex(comp)
        if out is None:
            out = comp
            continue
        if set(out.vertices) & set(comp.vertices):
            raise ValueError("join requires disjoint vertex sets")
        out = SimplicialComplex({f | g for f in out.facets for g in comp.facets})
    return out


def load_triangulation(text):
    """Parse a facet-list file: one facet per line, '#' starts a comment."""
    facets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            labels = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValueError("line %d: facets must be whitespace-separated integers" % lineno)
        if len(set(labels)) != len(labels):
            raise ValueError("line %d: repeated vertex in facet" % lineno)
        if any(v < 0 for v in labels):
            raise ValueError("line %d: negative vertex label" % lineno)
        facets.append(frozenset(labels))
    if not facets:
        raise ValueError("empty triangulation file")
    seen = set()
    for f in facets:
        if f in seen:
            raise ValueError("duplicate facet %s" % sorted(f))
        seen.add(f)
    for f in facets:
        if any(f < g for g in facets):
            raise ValueError("facet %s is contained in another facet" % sorted(f))
    return SimplicialComplex(facets)


# -- reference complexes and link classification ------------------------------


def ngon(n, labels=None):
    if n < 3:
        raise ValueError("an n-gon needs n >= 3")
    labels = labels or list(range(n))
    return SimplicialComplex(
        [frozenset({labels[i], labels[(i + 1) % n]}) for i in range(n)]
    )


def suspension_of_ngon(n):
    """Double pyramid over an n-gon; n = 4 is the octahedron."""
    poles = [n, n + 1]
    cyc = ngon(n)
    return join(SimplicialComplex([{poles[0]}, {poles[1]}]), cyc)


def boundary_simplex(k):
    return boundary(frozenset(range(k + 1)))


def cyclic_polytope_boundary(n):
    """Boundary of the cyclic polytope C(n, 3): a stacked 2-sphere.

    Built as (chain of n-3 edges) * {two apexes} together with the two
    triangles closing up the ends through the apex edge.
    """
    if n < 5:
        raise ValueError("cyclic polytope boundary needs n >= 5")
    chain = [frozenset({i, i + 1}) for i in range(n - 3)]
    apexes = [n - 2, n - 1]
    facets = [e | {a} for e in chain for a in apexes]
    facets.append(frozenset({0, n - 2, n - 1}))
    facets.append(frozenset({n - 3, n - 2, n - 1}))
    return SimplicialComplex(facets)


@dataclass(frozen=True)
class LinkType:
    tag: str
    n: int | None = None

    def __str__(self):
        return self.tag if self.n is None else "%s(%d)" % (self.tag, self.n)


TWO_POINTS = LinkType("two_points")
BOUNDARY_TETRAHEDRON = LinkType("boundary_tetrahedron")
SUSP_TRIANGLE = LinkType("susp_triangle")
SUSP_QUADRANGLE = LinkType("susp_quadrangle")
OTHER = LinkType("other")


def classify_link(link):
    """Classify a complex of dimension <= 2 against the small standard types.

    Each candidate with matching vertex count is checked by brute-force
    isomorphism, so the answer is relabeling-invariant by construction.
    """
    d = link.dim()
    nv = len(link.vertices)
    if d == 0:
        if nv == 2:
            return TWO_POINTS
        return OTHER
    if d == 1:
        if link.is_pure() and link.is_connected() and all(
            deg == 2 for deg in link.degree_multiset()
        ):
            return LinkType("ngon", nv)
        return OTHER
    if d == 2:
        if nv == 4 and link.is_isomorphic(boundary_simplex(3)):
            return BOUNDARY_TETRAHEDRON
        if nv == 5 and link.is_isomorphic(suspension_of_ngon(3)):
            return SUSP_TRIANGLE
        if nv == 6 and link.is_isomorphic(suspension_of_ngon(4)):
            return SUSP_QUADRANGLE
        if nv >= 7 and link.is_isomorphic(suspension_of_ngon(nv - 2)):
            return LinkType("susp_ngon", nv - 2)
        if nv >= 6 and link.is_isomorphic(cyclic_polytope_boundary(nv)):
            return LinkType("cyclic_polytope", nv)
        return OTHER
    return OTHER


# -- sphere sanity report ------------------------------------------------------


@dataclass
class SphereReport:
    ok: bool
    failures: list

    def __bool__(self):
        return self.ok


def is_combinatorial_3sphere_candidate(k):
    """Check the cheap necessary conditions for |K| to be a 3-sphere.

    Pure of dimension 3, every triangle in exactly two facets, Euler
    characteristic 0, and every vertex link a triangulated 2-sphere.
    """
    failures = []
    if k.dim() != 3 or not k.is_pure():
        failures.append("complex is not pure of dimension 3")
        return SphereReport(False, failures)
    for t in k.faces_of_dim(2):
        count = sum(1 for f in k.facets if t <= f)
        if count != 2:
            failures.append("triangle %s lies in %d facets" % (sorted(t), count))
    if k.euler_characteristic() != 0:
        failures.append("Euler characteristic %d != 0" % k.euler_characteristic())
    for v in k.vertices:
        lk = k.link({v})
        if not _is_2sphere(lk):
            failures.append("link of vertex %s is not a 2-sphere" % v)
    return SphereReport(not failures, failures)


def _is_2sphere(c):
    if c.dim() != 2 or not c.is_pure() or not c.is_connected():
        return False
    if c.euler_characteristic() != 2:
        return False
    return all(
        sum(1 for t in c.facets if e <= t) == 2 for e in c.faces_of_dim(1)
    )


def random_relabeling(complex_, rng):
    """The complex with vertices permuted by a random bijection (test helper)."""
    perm = list(complex_.vertices)
    rng.shuffle(perm)
    return complex_.relabel(dict(zip(complex_.vertices, perm)))


def all_vertex_permutations(vertices):
    for p in permutations(vertices):
        yield dict(zip(vertices, p))
