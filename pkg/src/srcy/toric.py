"""Toric verification for a crepant resolution of a hyperquotient point.

The fan data lives in a working basis of the ambient lattice N (an integer
refinement of Z^4); conversion to ambient coordinates happens only inside
pairings.  Chart polynomials of the strict transform, Reid's crepancy
criterion, exceptional-component fans and the intersection complex are all
computed with exact integer/rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import gcd

from . import intlinalg as la
from .polynomial import Poly, PolyRing
from .simplicial import SimplicialComplex

CHART_RING = PolyRing(["y1", "y2", "y3", "y4"])


# -- lattice, cones, fan -------------------------------------------------------


class AmbientLattice:
    """Rank-r lattice with a working basis given in ambient coordinates.

    `basis` is the matrix whose columns express the working basis vectors
    in ambient coordinates; its inverse determinant is the index of Z^r in
    the lattice.
    """

    def __init__(self, basis_rows):
        self.matrix = [[Fraction(x) for x in row] for row in basis_rows]
        self.rank = len(self.matrix)
        d = la.det(self.matrix)
        if d == 0:
            raise ValueError("lattice basis matrix is singular")
        self.index_over_zr = abs(1 / d)

    def to_ambient(self, working_vec):
        return tuple(
            sum(self.matrix[i][j] * working_vec[j] for j in range(self.rank))
            for i in range(self.rank)
        )


@dataclass(frozen=True)
class Cone:
    rays: tuple  # tuples of ints in the working basis

    def __post_init__(self):
        for r in self.rays:
            if la.primitive(r) != tuple(r):
                raise ValueError("ray %s is not primitive" % (r,))


class Fan:
    def __init__(self, lattice, rays, cones, sigma):
        self.lattice = lattice
        self.rays = [tuple(int(x) for x in r) for r in rays]
        for r in self.rays:
            if la.primitive(r) != r:
                raise ValueError("fan ray %s is not primitive" % (r,))
        if len(set(self.rays)) != len(self.rays):
            raise ValueError("repeated ray")
        self.cones = [tuple(c) for c in cones]
        self.sigma = tuple(sigma)  # ray indices spanning the subdivided cone
        self._ray_pos = {r: i for i, r in enumerate(self.rays)}
        sig = [self.rays[i] for i in self.sigma]
        self._sigma_inv = la.inverse(_ray_matrix_columns(sig))

    def ray_index(self, ray):
        return self._ray_pos[tuple(ray)]

    def cone_rays(self, cone_id):
        return [self.rays[i] for i in self.cones[cone_id]]

    def cones_containing(self, *ray_ids):
        want = set(ray_ids)
        return [c for c in range(len(self.cones)) if want <= set(self.cones[c])]

    def interior_ray_ids(self):
        return [i for i in range(len(self.rays)) if i not in self.sigma]

    def in_sigma(self, vec):
        coords = la.mat_vec_int(self._sigma_inv, list(vec))
        return all(c >= 0 for c in coords)

    def sigma_facet_functionals(self):
        return self._sigma_inv


def _ray_matrix_columns(rays):
    n = len(rays[0])
    return [[rays[j][i] for j in range(len(rays))] for i in range(n)]


def _integer_inverse(rays):
    cols = _ray_matrix_columns(rays)
    return la.unimodular_inverse(cols)


# -- fan verification ----------------------------------------------------------


@dataclass
class FanReport:
    ok: bool
    n_rays: int
    n_cones: int
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def verify_smooth_subdivision(fan):
    """Fan axioms, unimodularity and coverage of sigma by facet pairing."""
    problems = []
    for r in fan.rays:
        if not fan.in_sigma(r):
            problems.append("ray %s lies outside sigma" % (r,))

    inverses = {}
    for c, cone in enumerate(fan.cones):
        rays = fan.cone_rays(c)
        if len(rays) != fan.lattice.rank:
            problems.append("cone %d is not simplicial of full dimension" % (c + 1))
            continue
        d = la.det([[Fraction(x) for x in col] for col in _ray_matrix_columns(rays)])
        if abs(d) != 1:
            problems.append("cone %d has determinant %s, not unimodular" % (c + 1, d))
            continue
        inverses[c] = _integer_inverse(rays)

    if not problems:
        for c1, c2 in combinations(range(len(fan.cones)), 2):
            if not _pair_is_common_face(fan, inverses, c1, c2):
                problems.append("cones %d and %d do not meet in a common face" % (c1 + 1, c2 + 1))

    problems.extend(_facet_pairing_problems(fan))
    problems.extend(_sample_coverage_problems(fan, inverses))
    return FanReport(not problems, len(fan.rays), len(fan.cones), problems)


def _pair_is_common_face(fan, inverses, c1, c2):
    """Intersection of two unimodular cones equals the cone on shared rays.

    The intersection is cut out by the eight facet inequalities; every
    extremal ray solves three independent active constraints, so the
    signed 3x3 minors of constraint triples enumerate all candidates.
    """
    shared = {fan.rays[i] for i in set(fan.cones[c1]) & set(fan.cones[c2])}
    rows = [list(r) for r in inverses[c1]] + [list(r) for r in inverses[c2]]
    found = set()
    for triple in combinations(range(len(rows)), 3):
        m = [rows[t] for t in triple]
        d = _cross4(m)
        if d is None:
            continue
        for cand in (d, tuple(-x for x in d)):
            if cand in found:
                continue
            if all(sum(r[i] * cand[i] for i in range(4)) >= 0 for r in rows):
                found.add(cand)
    found = {la.primitive(v) for v in found}
    return found == shared


def _cross4(rows):
    """Primitive kernel direction of three integer rows in Z^4, or None."""
    out = []
    for skip in range(4):
        cols = [c for c in range(4) if c != skip]
        m = [[rows[i][c] for c in cols] for i in range(3)]
        d = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        out.append(d if skip % 2 == 0 else -d)
    if all(x == 0 for x in out):
        return None
    return la.primitive(out)


def _facet_pairing_problems(fan):
    problems = []
    counts = {}
    for cone in fan.cones:
        for facet in combinations(sorted(cone), 3):
            counts[facet] = counts.get(facet, 0) + 1
    functionals = fan.sigma_facet_functionals()
    for facet, count in sorted(counts.items()):
        rays = [fan.rays[i] for i in facet]
        on_boundary = any(
            all(sum(w[i] * r[i] for i in range(4)) == 0 for r in rays) for w in functionals
        )
        if on_boundary and count != 1:
            problems.append("boundary facet %s shared by %d cones" % (facet, count))
        if not on_boundary and count != 2:
            problems.append("interior facet %s shared by %d cones" % (facet, count))
    return problems


def _sample_coverage_problems(fan, inverses):
    problems = []
    for c in range(len(fan.cones)):
        if c not in inverses:
            continue
        point = [sum(r[i] for r in fan.cone_rays(c)) for i in range(4)]
        hits = sum(
            1
            for other, inv in inverses.items()
            if all(x >= 0 for x in la.mat_vec_int(inv, point))
        )
        if hits != 1:
            problems.append("interior point of cone %d lies in %d cones" % (c + 1, hits))
    return problems


# -- charts and the strict transform -------------------------------------------


@dataclass
class ChartPolynomial:
    cone_id: int
    poly: Poly


def chart_exponents(fan, cone_id, monomial):
    """Pairing of a dual-lattice monomial with each ray of the chart."""
    out = []
    for ray in fan.cone_rays(cone_id):
        amb = fan.lattice.to_ambient(ray)
        val = sum(Fraction(m) * a for m, a in zip(monomial, amb))
        out.append(val)
    return out


def strict_transform(fan, cone_id, invariant_monomials):
    """Chart polynomial of the strict transform in the given cone.

    Each invariant monomial maps to the chart monomial of its pairings
    with the four rays; the monomial gcd is divided out.  Non-integral or
    negative exponents indicate bad input and raise.
    """
    terms = []
    for m in invariant_monomials:
        exps = chart_exponents(fan, cone_id, m)
        for e in exps:
            if e.denominator != 1 or e < 0:
                raise ValueError(
                    "monomial %s has non-integral chart exponent %s in cone %d"
                    % (m, e, cone_id + 1)
                )
        terms.append(tuple(int(e) for e in exps))
    poly = PolyRing(CHART_RING.names).zero()
    for t in terms:
        poly = poly + CHART_RING.monomial(t)
    return ChartPolynomial(cone_id, poly.strip_monomial_content())


def all_charts(fan, invariant_monomials):
    return {c: strict_transform(fan, c, invariant_monomials) for c in range(len(fan.cones))}


def chart_restriction(fan, charts, cone_id, ray_ids):
    """Chart polynomial with the coordinates of the given rays set to zero."""
    cone = fan.cones[cone_id]
    subs = {}
    for rid in ray_ids:
        pos = cone.index(rid)
        subs[CHART_RING.names[pos]] = 0
    return charts[cone_id].poly.substitute(subs)


def divisor_meets_strict_transform(fan, charts, ray_id):
    """True iff the restriction to the divisor is non-constant in some chart."""
    for c in fan.cones_containing(ray_id):
        if not chart_restriction(fan, charts, c, [ray_id]).is_constant():
            return True
    return False


# -- crepancy -------------------------------------------------------------------


def crepancy_check(fan, f_monomials):
    """Reid's discrepancy criterion per interior ray.

    For each ray a (in ambient coordinates), crepant iff
    a(1,...,1) = min over the defining monomials of a(m), plus one.
    """
    results = {}
    for rid in fan.interior_ray_ids():
        amb = fan.lattice.to_ambient(fan.rays[rid])
        alpha_one = sum(amb)
        alpha_f = min(
            sum(Fraction(m) * a for m, a in zip(mono, amb)) for mono in f_monomials
        )
        results[rid] = alpha_one == alpha_f + 1
    return results


# -- quotient fans: Star and orbit closures -------------------------------------


@dataclass
class StarFan:
    ray_id: int
    projection: list  # 3 x 4 integer matrix
    rays: dict  # adjacent ray id -> projected primitive 3-vector
    cones: list  # triples of adjacent ray ids, per maximal cone containing rho
    cone_ids: list  # the fan cone ids, aligned with `cones`


def star(fan, ray_id):
    proj = la.quotient_projection([list(fan.rays[ray_id])])
    rays = {}
    cones = []
    cone_ids = []
    for c in fan.cones_containing(ray_id):
        others = [i for i in fan.cones[c] if i != ray_id]
        for i in others:
            img = tuple(la.mat_vec_int(proj, list(fan.rays[i])))
            prev = rays.setdefault(i, img)
            if prev != img:
                raise RuntimeError("inconsistent star projection")
        cones.append(tuple(others))
        cone_ids.append(c)
    return StarFan(ray_id, proj, rays, cones, cone_ids)


def _cyclic_sort_2d(rays):
    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def cmp(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        cr = a[0] * b[1] - a[1] * b[0]
        return 0 if cr == 0 else (-1 if cr > 0 else 1)

    return sorted(rays, key=cmp_to_key(cmp))


def _check_complete_smooth_2d(rays, require_complete=True):
    rays = _cyclic_sort_2d(rays)
    n = len(rays)
    complete = n >= 3 and all(
        rays[i][0] * rays[(i + 1) % n][1] - rays[i][1] * rays[(i + 1) % n][0] == 1
        for i in range(n)
    )
    if require_complete:
        if not complete:
            raise ValueError("rays %s do not form a smooth complete fan" % (rays,))
        return rays
    return rays, complete


@dataclass
class SurfaceFan:
    rays: list  # cyclically sorted primitive 2-vectors
    chi: int
    factor_count: int = 1
    complete: bool = True


def method1_component(fan, charts, ray_id, cone_id=None):
    """Closure fan of the torus part of the divisor intersection.

    Requires a chart where the restriction, with monomial content removed,
    is a constant plus a single monomial.  The kernel of that monomial's
    exponent functional embeds a rank-2 lattice into the star lattice; the
    component's fan is the preimage of Star(rho).  If the exponent
    functional is imprimitive with content c, the torus part has c
    conjugate components sharing this fan.
    """
    candidates = fan.cones_containing(ray_id) if cone_id is None else [cone_id]
    chosen = None
    for c in candidates:
        fbar = chart_restriction(fan, charts, c, [ray_id])
        if fbar.is_zero() or fbar.is_constant():
            continue
        h = fbar.strip_monomial_content()
        mono = [(e, co) for e, co in h.monomials() if any(e)]
        if len(h.terms) == 2 and len(mono) == 1:
            chosen = (c, mono[0][0])
            break
    if chosen is None:
        raise ValueError("no chart shows a binomial torus equation for ray %d" % ray_id)
    c, exps = chosen
    content = 0
    for e in exps:
        content = gcd(content, e)
    mu = _functional_from_chart_exponents(fan, c, exps)
    st = star(fan, ray_id)
    u = _extend_projection(fan, ray_id, st)
    m_tilde = _push_functional(mu, u)
    phi = _kernel_columns(m_tilde)
    rays2d = _check_complete_smooth_2d(_preimage_fan_rays(st, phi))
    return SurfaceFan(rays2d, len(rays2d), max(content, 1))


def _functional_from_chart_exponents(fan, cone_id, exps):
    """Integer working-dual vector pairing to exps against the cone's rays."""
    cols = _ray_matrix_columns(fan.cone_rays(cone_id))
    binv = la.unimodular_inverse(cols)
    # mu = exps^T B^{-1}: row vector with mu . ray_j = exps_j
    return [sum(exps[i] * binv[i][j] for i in range(4)) for j in range(4)]


def _extend_projection(fan, ray_id, st):
    """Unimodular U with U rho = e1; rows 2..4 realize the star projection."""
    u = la.complete_to_basis(list(fan.rays[ray_id]))
    if [u[i] for i in range(1, 4)] != st.projection:
        u = [u[0]] + [list(r) for r in st.projection]
        if abs(la.det([[Fraction(x) for x in row] for row in u])) != 1:
            raise RuntimeError("projection extension failed")
    return u


def _push_functional(mu, u):
    uinv = la.unimodular_inverse(u)
    pushed = [sum(mu[i] * uinv[i][j] for i in range(4)) for j in range(4)]
    if pushed[0] != 0:
        raise RuntimeError("functional does not vanish on the collapsed ray")
    return pushed[1:]


def _kernel_columns(functional):
    basis = la.kernel_basis_of_functional(functional)
    return [[basis[j][i] for j in range(2)] for i in range(3)]  # 3 x 2


def _preimage_fan_rays(st, phi):
    rays = set()
    for cone in st.cones:
        u = [st.rays[i] for i in cone]
        w = la.unimodular_inverse(_ray_matrix_columns(u))
        g = [[sum(w[r][i] * phi[i][c] for i in range(3)) for c in range(2)] for r in range(3)]
        cands = []
        for row in g:
            if row == [0, 0]:
                continue
            for d in ((-row[1], row[0]), (row[1], -row[0])):
                if all(gr[0] * d[0] + gr[1] * d[1] >= 0 for gr in g):
                    cands.append(la.primitive(d))
        cands = sorted(set(cands))
        for d in cands:
            inside = False
            for a, b in combinations(cands, 2):
                for p, q in ((a, b), (b, a)):
                    if (
                        p[0] * q[1] - p[1] * q[0] > 0
                        and p[0] * d[1] - p[1] * d[0] > 0
                        and d[0] * q[1] - d[1] * q[0] > 0
                    ):
                        inside = True
            if not inside:
                rays.add(d)
    return list(rays)


def orbit_closure_component(fan, ray_id1, ray_id2):
    """Fan of the orbit closure of a 2-cone, projected to its quotient plane.

    For a 2-cone on the subdivided cone's boundary the projected fan only
    covers the quotient image of that cone; the result is then flagged as
    incomplete and its ray count is not an Euler characteristic.
    """
    cones = fan.cones_containing(ray_id1, ray_id2)
    if not cones:
        raise ValueError("rays %d, %d do not span a cone of the fan" % (ray_id1, ray_id2))
    proj = la.quotient_projection(
        [list(fan.rays[ray_id1]), list(fan.rays[ray_id2])]
    )
    rays = set()
    for c in cones:
        for i in fan.cones[c]:
            if i in (ray_id1, ray_id2):
                continue
            rays.add(tuple(la.mat_vec_int(proj, list(fan.rays[i]))))
    sorted_rays, complete = _check_complete_smooth_2d(
        [la.primitive(r) for r in rays], require_complete=False
    )
    return SurfaceFan(sorted_rays, len(sorted_rays), complete=complete)


# -- smooth complete toric surfaces ---------------------------------------------


@dataclass(frozen=True)
class SurfaceType:
    kind: str  # 'P2', 'F', 'BlP2', 'BlF'
    n: int = 0
    blowups: int = 0

    def __str__(self):
        if self.kind == "P2":
            return "P2"
        if self.kind == "F":
            return "F%d" % self.n
        if self.kind == "BlP2":
            return "Bl%dP2" % self.blowups
        return "Bl%dF%d" % (self.blowups, self.n)

    @classmethod
    def parse(cls, text):
        if text == "P2":
            return cls("P2")
        if text.startswith("F"):
            return cls("F", n=int(text[1:]))
        if text.startswith("Bl"):
            rest = text[2:]
            k = ""
            while rest and rest[0].isdigit():
                k += rest[0]
                rest = rest[1:]
            if rest == "P2":
                return cls("BlP2", blowups=int(k))
            if rest.startswith("F"):
                return cls("BlF", n=int(rest[1:]), blowups=int(k))
        raise ValueError("unrecognized surface tag %r" % text)

    def chi(self):
        base = 3 if self.kind in ("P2", "BlP2") else 4
        return base + self.blowups


def _self_intersection_coeffs(rays):
    n = len(rays)
    out = []
    for i in range(n):
        prev, cur, nxt = rays[i - 1], rays[i], rays[(i + 1) % n]
        s = (prev[0] + nxt[0], prev[1] + nxt[1])
        if cur[0] != 0:
            a, rem = divmod(s[0], cur[0])
            parallel = rem == 0 and a * cur[1] == s[1]
        else:
            a, rem = divmod(s[1], cur[1])
            parallel = rem == 0 and a * cur[0] == s[0]
        if not parallel:
            raise ValueError("fan is not smooth at ray %s" % (cur,))
        out.append(a)
    return out


def classify_toric_surface(rays):
    """Tag a smooth complete 2d fan as P2, F_n or an iterated blow-up.

    Searches every blow-down order; if the projective plane is reachable
    the tag is Bl_k P2, otherwise Bl_k F_n with the smallest reachable n.
    """
    rays = _check_complete_smooth_2d(list(rays))
    terminals = set()
    seen = set()

    def explore(state):
        if state in seen:
            return
        seen.add(state)
        coeffs = _self_intersection_coeffs(state)
        if len(state) == 3:
            if coeffs != [-1, -1, -1]:
                raise ValueError("three-ray fan with unexpected intersections %s" % coeffs)
            terminals.add(("P2", 0))
            return
        if len(state) == 4 and 1 not in coeffs:
            n = max(coeffs)
            if sorted(coeffs) != sorted([0, n, 0, -n]):
                raise ValueError("four-ray fan with unexpected intersections %s" % coeffs)
            terminals.add(("F", n))
            return
        blew = False
        for i, a in enumerate(coeffs):
            if a == 1:
                blew = True
                explore(tuple(state[:i] + state[i + 1:]))
        if not blew:
            raise ValueError("no exceptional ray on a fan with %d rays" % len(state))

    explore(tuple(rays))
    k = len(rays)
    if ("P2", 0) in terminals:
        return SurfaceType("P2") if k == 3 else SurfaceType("BlP2", blowups=k - 3)
    n = min(t[1] for t in terminals)
    if k == 4:
        return SurfaceType("F", n=n)
    return SurfaceType("BlF", n=n, blowups=k - 4)


# -- P1-bundle recognition (method 2) -------------------------------------------


@dataclass
class PBundleStructure:
    fiber: tuple  # star-lattice direction of the P1 fiber
    base_rays: list
    base_chi: int
    chart_restrictions: list  # (cone id, restriction polynomial) for inspection


def pbundle_structure(fan, charts, ray_id):
    """Detect a locally trivial P1-bundle structure on Star(rho).

    Looks for a direction e with both e and -e among the star's rays such
    that every maximal cone contains exactly one of them and projects to a
    maximal cone of a smooth complete 2d base fan.  Classification of the
    divisor intersection itself is left to the caller; the chart
    restrictions are returned for that purpose.
    """
    st = star(fan, ray_id)
    values = set(st.rays.values())
    for e in sorted(values):
        if tuple(-x for x in e) not in values:
            continue
        try:
            base = _project_star_along(st, e)
        except ValueError:
            continue
        restrictions = [
            (c, chart_restriction(fan, charts, c, [ray_id])) for c in st.cone_ids
        ]
        return PBundleStructure(e, base, len(base), restrictions)
    return None


def _project_star_along(st, e):
    proj = la.quotient_projection([list(e)])
    rays = set()
    pair = {e, tuple(-x for x in e)}
    cones = []
    for cone in st.cones:
        vals = [st.rays[i] for i in cone]
        fiber = [v for v in vals if v in pair]
        if len(fiber) != 1:
            raise ValueError("cone does not split along the fiber direction")
        basev = [tuple(la.mat_vec_int(proj, list(v))) for v in vals if v not in pair]
        if len(basev) != 2:
            raise ValueError("cone does not split along the fiber direction")
        rays.update(la.primitive(v) for v in basev)
        cones.append(frozenset(la.primitive(v) for v in basev))
    sorted_rays = _check_complete_smooth_2d(list(rays))
    n = len(sorted_rays)
    expected = {
        frozenset((sorted_rays[i], sorted_rays[(i + 1) % n])) for i in range(n)
    }
    if set(cones) != expected or len(cones) != 2 * n:
        raise ValueError("star cones do not project onto the base fan")
    return sorted_rays


# -- polytopes and normal fans (method 4) ----------------------------------------


def hull_facets(points):
    """Facets of a full-dimensional 3d lattice polytope.

    Returns (outer normal, offset, incident point indices) triples with
    primitive integer normals; brute force over point triples.
    """
    pts = [tuple(int(x) for x in p) for p in points]
    facets = {}
    for i, j, k in combinations(range(len(pts)), 3):
        a = tuple(pts[j][t] - pts[i][t] for t in range(3))
        b = tuple(pts[k][t] - pts[i][t] for t in range(3))
        n = (
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        )
        if n == (0, 0, 0):
            continue
        n = la.primitive(n)
        off = sum(n[t] * pts[i][t] for t in range(3))
        sides = [sum(n[t] * p[t] for t in range(3)) - off for p in pts]
        if all(s <= 0 for s in sides):
            key = (n, off)
        elif all(s >= 0 for s in sides):
            n = tuple(-x for x in n)
            off = -off
            sides = [-s for s in sides]
            key = (n, off)
        else:
            continue
        facets[key] = frozenset(t for t, s in enumerate(sides) if s == 0)
    return [(n, off, inc) for (n, off), inc in sorted(facets.items())]


def normal_fan(points):
    """Outer normal fan of a 3d polytope, as (rays, maximal cones)."""
    facets = hull_facets(points)
    normals = [f[0] for f in facets]
    cones = []
    for v in range(len(points)):
        incident = [i for i, f in enumerate(facets) if v in f[2]]
        if len(incident) >= 3:
            cones.append(tuple(sorted(incident)))
    vertex_cones = [c for c in cones if len(c) >= 3]
    return normals, vertex_cones


def lattice_points_in_polytope(points):
    facets = hull_facets(points)
    lo = [min(p[i] for p in points) for i in range(3)]
    hi = [max(p[i] for p in points) for i in range(3)]
    count = []
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                if all(
                    n[0] * x + n[1] * y + n[2] * z <= off for n, off, _ in facets
                ):
                    count.append((x, y, z))
    return count


def fans_isomorphic_3d(rays_a, cones_a, rays_b, cones_b):
    """GL_3(Z)-equivalence of two complete simplicial 3d fans.

    Candidates map one cone of the first fan onto each cone of the second
    in every ray order; a candidate must be unimodular, carry rays to rays
    and cones to cones.
    """
    from itertools import permutations as _perms

    if len(rays_a) != len(rays_b) or len(cones_a) != len(cones_b):
        return False
    cones_a = [tuple(c) for c in cones_a]
    base = cones_a[0]
    if len(base) != 3:
        return False
    inv_a = la.inverse(_ray_matrix_columns([rays_a[i] for i in base]))
    pos_b = {tuple(r): j for j, r in enumerate(rays_b)}
    set_b = {frozenset(c) for c in cones_b}
    for cone in cones_b:
        if len(cone) != 3:
            return False
        for order in _perms(cone):
            rows = la.mat_fractions(_ray_matrix_columns([rays_b[i] for i in order]))
            prod = [
                [sum(rows[i][k] * inv_a[k][j] for k in range(3)) for j in range(3)]
                for i in range(3)
            ]
            if any(x.denominator != 1 for row in prod for x in row):
                continue
            u = [[int(x) for x in row] for row in prod]
            if abs(la.det(u)) != 1:
                continue
            images = [la.primitive(la.mat_vec_int(u, list(r))) for r in rays_a]
            if any(img not in pos_b for img in images):
                continue
            mapping = {i: pos_b[img] for i, img in enumerate(images)}
            if {frozenset(mapping[i] for i in c) for c in cones_a} == set_b:
                return True
    return False


def method4_normal_fan_check(fan, ray_id, polytope_points):
    """Verify Star(rho) is the outer normal fan of the given polytope."""
    st = star(fan, ray_id)
    st_rays = sorted(set(st.rays.values()))
    ray_pos = {r: i for i, r in enumerate(st_rays)}
    st_cones = [tuple(sorted(ray_pos[st.rays[i]] for i in cone)) for cone in st.cones]
    nf_rays, nf_cones = normal_fan(polytope_points)
    return fans_isomorphic_3d(nf_rays, nf_cones, st_rays, st_cones)


# -- exceptional components and the intersection complex -------------------------


@dataclass
class Component:
    label: str
    kind: str  # 'divisor', 'orbit_pair', 'torus_factor'
    ray_ids: tuple
    factor_index: int = 0
    chi: int = None
    surface: SurfaceType = None
    chi_provenance: str = "derived"


@dataclass
class ComponentStructure:
    components: list
    meeting_rays: list
    factor_disjointness_certified: bool


def derive_component_structure(fan, charts):
    """Split the exceptional locus into components from the chart data.

    For each interior ray meeting the strict transform, monomial factors
    of the restriction identify orbit-closure components on 2-cones, and
    the content-free part identifies the torus-dominant part, which splits
    into conjugate factors when its binomial exponent is imprimitive.
    """
    meeting = [
        rid
        for rid in fan.interior_ray_ids()
        if divisor_meets_strict_transform(fan, charts, rid)
    ]
    components = []
    seen_pairs = {}
    certified = True
    for rid in meeting:
        partners = set()
        factor_count = None
        horizontal = False
        binomial_everywhere = True
        for c in fan.cones_containing(rid):
            fbar = chart_restriction(fan, charts, c, [rid])
            cone = fan.cones[c]
            pos = cone.index(rid)
            content = fbar.content_exponents()
            for i, e in enumerate(content):
                if e > 0:
                    if i == pos:
                        raise RuntimeError("restriction divisible by its own coordinate")
                    partners.add(cone[i])
            h = fbar.strip_monomial_content()
            if h.is_constant():
                continue
            horizontal = True
            nonconst = [(e, co) for e, co in h.monomials() if any(e)]
            if len(h.terms) == 2 and len(nonconst) == 1:
                g = 0
                for e in nonconst[0][0]:
                    g = gcd(g, e)
                if factor_count is None:
                    factor_count = g
                elif factor_count != g:
                    raise RuntimeError("inconsistent factor content across charts")
            else:
                binomial_everywhere = False
        if horizontal:
            count = factor_count if (factor_count and binomial_everywhere) else 1
            if count > 1 and not binomial_everywhere:
                certified = False
            for k in range(count):
                components.append(
                    Component("", "torus_factor" if count > 1 else "divisor", (rid,), k)
                )
        for p in sorted(partners):
            key = frozenset((rid, p))
            if key not in seen_pairs:
                comp = Component("", "orbit_pair", tuple(sorted(key)))
                seen_pairs[key] = comp
                components.append(comp)
    return ComponentStructure(components, meeting, certified)


def match_component_table(fan, charts, structure, rows):
    """Align ingested table rows with the derived component structure.

    Rows are (label, ray, type tag, chi).  Divisor and torus-factor rows
    match their ray; an orbit-pair row matches the pair containing its ray
    (pairs of two interior rays before mixed pairs, which is enough to
    separate the fixtures' rows sharing a ray).  Where a fan-based Euler
    characteristic is computable it must agree with the ingested one, and
    every tag's nominal chi must equal the recorded chi.
    """
    interior = set(fan.interior_ray_ids())
    components = list(structure.components)
    taken = set()
    out = []
    for label, ray, type_tag, chi in rows:
        ray_id = fan.ray_index(ray)
        surface = SurfaceType.parse(type_tag)
        if surface.chi() != chi:
            raise ValueError("row %s: tag %s has chi %d, recorded %d"
                             % (label, type_tag, surface.chi(), chi))
        candidates = []
        for i, comp in enumerate(components):
            if i in taken or ray_id not in comp.ray_ids:
                continue
            candidates.append(i)
        # prefer single-ray components, then pairs of interior rays
        def pref(i):
            comp = components[i]
            both_interior = all(r in interior for r in comp.ray_ids)
            return (len(comp.ray_ids), 0 if both_interior else 1, comp.factor_index)

        candidates.sort(key=pref)
        chosen = None
        for i in candidates:
            comp = components[i]
            derived_chi, derived_surface = component_chi(fan, charts, comp)
            if derived_chi is not None and derived_chi != chi:
                continue
            chosen = i
            comp.label = label
            comp.chi = chi
            comp.surface = surface
            comp.chi_provenance = "derived" if derived_chi is not None else "ingested"
            break
        if chosen is None:
            raise ValueError("no derived component matches table row %s" % label)
        taken.add(chosen)
        out.append(components[chosen])
    if len(taken) != len(components):
        raise ValueError("component table does not cover the derived structure")
    return out


def component_chi(fan, charts, comp):
    """Euler characteristic and surface fan where mechanically available."""
    if comp.kind == "orbit_pair":
        sf = orbit_closure_component(fan, *comp.ray_ids)
        if not sf.complete:
            raise ValueError("orbit closure of %s is not complete" % (comp.ray_ids,))
        return sf.chi, classify_toric_surface(sf.rays)
    try:
        sf = method1_component(fan, charts, comp.ray_ids[0])
    except ValueError:
        return None, None
    return sf.chi, classify_toric_surface(sf.rays)


def components_intersect(fan, charts, comps):
    """Whether the given exceptional components have a common point.

    Works chart by chart: a restriction that is identically zero or
    non-constant witnesses a common point; a nonzero constant rules the
    chart out.  Conjugate torus factors on one ray are handled through
    the content-free polynomial, which covers both factors at once, and
    two distinct factors on the same ray are disjoint.
    """
    factors = [c for c in comps if c.kind == "torus_factor"]
    if len({(c.ray_ids, c.factor_index) for c in comps}) != len(comps):
        raise ValueError("repeated component")
    if len(factors) >= 2:
        rays = {c.ray_ids[0] for c in factors}
        if len(rays) == 1:
            return False  # distinct conjugate factors never meet
        raise NotImplementedError("torus factors on distinct rays")
    needed = sorted({rid for c in comps for rid in c.ray_ids})
    for c in fan.cones_containing(*needed):
        if factors:
            rho = factors[0].ray_ids[0]
            fbar = chart_restriction(fan, charts, c, [rho])
            h = fbar.strip_monomial_content()
            rest = [rid for rid in needed if rid != rho]
            if rest:
                cone = fan.cones[c]
                subs = {CHART_RING.names[cone.index(rid)]: 0 for rid in rest}
                h = h.substitute(subs)
            if h.is_zero() or not h.is_constant():
                return True
        else:
            p = chart_restriction(fan, charts, c, needed)
            if p.is_zero() or not p.is_constant():
                return True
    return False


def intersection_complex(fan, charts, components):
    """Nerve of the exceptional components, up to triple intersections."""
    n = len(components)
    faces = [frozenset([i + 1]) for i in range(n)]
    edges = []
    for i, j in combinations(range(n), 2):
        if components_intersect(fan, charts, [components[i], components[j]]):
            edges.append(frozenset([i + 1, j + 1]))
    faces.extend(edges)
    edge_set = set(edges)
    for i, j, k in combinations(range(n), 3):
        pairs = [
            frozenset([i + 1, j + 1]),
            frozenset([i + 1, k + 1]),
            frozenset([j + 1, k + 1]),
        ]
        if any(p not in edge_set for p in pairs):
            continue
        if components_intersect(
            fan, charts, [components[i], components[j], components[k]]
        ):
            faces.append(frozenset([i + 1, j + 1, k + 1]))
    return SimplicialComplex.from_faces(faces)


def euler_exceptional(chis, complex_):
    """Inclusion-exclusion: triple points count once, double curves are P1s."""
    if any(c is None for c in chis):
        raise ValueError("missing component Euler characteristic")
    n_edges = len(complex_.faces_of_dim(1))
    n_triangles = len(complex_.faces_of_dim(2))
    return sum(chis) - 2 * n_edges + n_triangles


def mckay_count(group_order):
    """Conjugacy classes of an abelian group: its order."""
    return int(group_order)


def mirror_euler(
    chi_smooth,
    n_sing,
    milnor,
    group_order,
    n_fixed,
    chi_exceptional,
    n_exceptional_points,
    mckay,
    n_mckay_points,
):
    """Euler characteristic of the resolved quotient.

    The singular fiber's chi is the smooth fiber's plus one Milnor number
    per singular point; the free part divides by the group order, and each
    resolved fixed point contributes its exceptional fiber.
    """
    numerator = chi_smooth + n_sing * milnor - n_fixed
    if numerator % group_order != 0:
        raise ValueError(
            "chi(U) is not integral: (%d)/%d" % (numerator, group_order)
        )
    chi_u = numerator // group_order
    return chi_u + n_exceptional_points * chi_exceptional + n_mckay_points * mckay
