"""Line-bundle cohomology on projective space and exact-sequence chasing.

Dimensions of twisted structure sheaves follow Bott's formula on P^n; a
conservative solver propagates what exactness of long exact sequences
forces (and nothing more), matching a by-hand chase.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb


def h_twist(n, d, p):
    """h^p of O(d) on P^n: nonzero only at p = 0 and p = n."""
    if p == 0 and d >= 0:
        return comb(d + n, n)
    if p == n and d <= -n - 1:
        return comb(-d - 1, n)
    return 0


def chi_twist(n, d):
    return sum((-1) ** p * h_twist(n, d, p) for p in range(n + 1))


@dataclass(frozen=True)
class TwistSum:
    """Direct sum of line bundles sum_i O(d_i)^{m_i} on P^n."""

    terms: tuple  # ((d, multiplicity), ...)
    n: int

    def h(self, p):
        return sum(m * h_twist(self.n, d, p) for d, m in self.terms)

    def chi(self):
        return sum(m * chi_twist(self.n, d) for d, m in self.terms)

    def twist(self, k):
        return TwistSum(tuple((d + k, m) for d, m in self.terms), self.n)

    def table(self, name):
        return CohTable(name, self.n, [self.h(p) for p in range(self.n + 1)])

    def __str__(self):
        return " + ".join("(%d)^%d" % (d, m) for d, m in self.terms)


def resolve_shift(resolution, p):
    """h^p of a sheaf resolved by terms whose inner cohomology vanishes.

    `resolution` lists [A_0, ..., A_k] with A_0 closest to the resolved
    sheaf.  When every A_i with i < k is cohomology-free, exactness gives
    h^p = h^(p+k) of A_k.  The vanishing is checked, not assumed.
    """
    k = len(resolution) - 1
    n = resolution[0].n
    for i in range(k):
        for q in range(n + 1):
            if resolution[i].h(q) != 0:
                raise ValueError(
                    "inner term %d has h^%d = %d; shift lemma does not apply"
                    % (i, q, resolution[i].h(q))
                )
    if p < 0 or p > n:
        return 0
    if p + k > n:
        return 0
    return resolution[k].h(p + k)


# -- conservative long-exact-sequence solver --------------------------------------


@dataclass
class CohTable:
    """h^0..h^n of a named sheaf; None marks an unknown entry."""

    name: str
    n: int
    entries: list = None
    dim_bound: int = None  # h^p = 0 for p > dim_bound, when set

    def __post_init__(self):
        if self.entries is None:
            self.entries = [None] * (self.n + 1)
        if self.dim_bound is not None:
            for p in range(self.dim_bound + 1, self.n + 1):
                self._set(p, 0)

    def _set(self, p, value):
        if value < 0:
            raise Contradiction("%s: h^%d forced negative (%d)" % (self.name, p, value))
        if self.entries[p] is None:
            self.entries[p] = value
            return True
        if self.entries[p] != value:
            raise Contradiction(
                "%s: h^%d is both %d and %d" % (self.name, p, self.entries[p], value)
            )
        return False

    def known(self):
        return all(e is not None for e in self.entries)

    def chi(self):
        return sum((-1) ** p * e for p, e in enumerate(self.entries))


class Contradiction(RuntimeError):
    pass


@dataclass
class ShortExact:
    """0 -> a -> b -> c -> 0 of CohTables on the same P^n."""

    a: CohTable
    b: CohTable
    c: CohTable

    def les_terms(self):
        out = []
        for p in range(self.a.n + 1):
            out.append((self.a, p))
            out.append((self.b, p))
            out.append((self.c, p))
        return out


def les_solve(sequences):
    """Propagate dimensions forced by exactness across the sequences.

    A known zero splits a long exact sequence into independent windows;
    within a window the alternating sum vanishes, so a single unknown is
    forced.  Runs to a fixpoint; raises Contradiction on a negative or
    conflicting assignment.  Returns the remaining unknowns as
    (sheaf name, degree) pairs.
    """
    progress = True
    while progress:
        progress = False
        for seq in sequences:
            terms = seq.les_terms()
            window = []
            for table, p in terms + [(None, None)]:
                value = table.entries[p] if table is not None else 0
                if value == 0:
                    progress |= _close_window(window)
                    window = []
                else:
                    window.append((table, p))
    unknown = []
    seen = set()
    for seq in sequences:
        for table in (seq.a, seq.b, seq.c):
            for p, e in enumerate(table.entries):
                if e is None and (table.name, p) not in seen:
                    seen.add((table.name, p))
                    unknown.append((table.name, p))
    return unknown


def _close_window(window):
    unknown = [(t, p) for t, p in window if t.entries[p] is None]
    if len(unknown) > 1:
        return False
    total = 0
    sign = 1
    target_sign = None
    for t, p in window:
        if t.entries[p] is None:
            target_sign = sign
        else:
            total += sign * t.entries[p]
        sign = -sign
    if not unknown:
        if total != 0:
            raise Contradiction(
                "exact window %s has alternating sum %d"
                % ([(t.name, p) for t, p in window], total)
            )
        return False
    t, p = unknown[0]
    t._set(p, -total * target_sign)
    return True


# -- the complete-intersection Hodge chase -----------------------------------------


@dataclass
class HodgeResult:
    h11: int
    h12: int
    intermediates: dict = field(default_factory=dict)


def sheaf_from_resolution(resolution, name):
    """Cohomology table of the sheaf resolved by [A_0, ..., A_k].

    Splits the resolution into short exact sequences through its syzygy
    sheaves and lets the window solver fill in the table.
    """
    n = resolution[0].n
    target = CohTable(name, n)
    sequences = []
    current = target
    for i in range(len(resolution) - 1):
        mid = resolution[i].table("%s:A%d" % (name, i))
        if i == len(resolution) - 2:
            left = resolution[i + 1].table("%s:A%d" % (name, i + 1))
        else:
            left = CohTable("%s:S%d" % (name, i + 1), n)
        sequences.append(ShortExact(left, mid, current))
        current = left
    unknown = les_solve(sequences)
    bad = [u for u in unknown if u[0] == name]
    if bad:
        raise ValueError("resolution leaves %s undetermined at %s" % (name, bad))
    return target


def hodge_pipeline_ci(structure_resolution, ideal_square_resolution):
    """Hodge numbers (h11, h12) of a Calabi-Yau complete intersection 3-fold.

    Inputs are the twist data of a resolution of the structure sheaf on
    P^n and of the square of the ideal sheaf.  The chase mirrors a manual
    computation: structure sheaf, its twist by -1, the ideal sheaf via the
    shift lemma, the ideal square through its resolution, then the
    conormal and cotangent sequences.  Hodge symmetry supplies
    h^3(Omega_X) = h^2(O_X); everything else is forced by exactness.
    """
    n = structure_resolution[0].n
    inter = {}

    ox = sheaf_from_resolution(structure_resolution, "O_X")
    inter["h0_ox"] = ox.entries[0]
    inter["h3_ox"] = ox.entries[3]

    twisted = [t.twist(-1) for t in structure_resolution]
    ox_m1 = CohTable("O_X(-1)", n, [resolve_shift(twisted, p) for p in range(n + 1)])
    inter["h3_ox_minus1"] = ox_m1.entries[3]

    ideal = CohTable(
        "J_X", n, [resolve_shift(structure_resolution[1:], p) for p in range(n + 1)]
    )
    inter["h4_ideal"] = ideal.entries[4]

    k_term, h_term, g_term = ideal_square_resolution
    image = CohTable("Im", n)
    j2 = CohTable("J2", n)
    conormal = CohTable("N_dual", n, dim_bound=3)
    euler_mid = CohTable(
        "O_X(-1)^%d" % (n + 1), n, [(n + 1) * e for e in ox_m1.entries]
    )
    omega_restr = CohTable("Omega|X", n, dim_bound=3)
    omega = CohTable("Omega_X", n, dim_bound=3)
    omega.entries[3] = ox.entries[2]  # Hodge symmetry h^{1,3} = h^{0,2}

    sequences = [
        ShortExact(g_term.table("G"), h_term.table("H"), image),
        ShortExact(image, k_term.table("K"), j2),
        ShortExact(j2, ideal, conormal),
        ShortExact(omega_restr, euler_mid, ox),
        ShortExact(conormal, omega_restr, omega),
    ]
    unknown = les_solve(sequences)
    needed = [("Omega_X", 1), ("Omega_X", 2)]
    missing = [u for u in unknown if u in needed]
    if missing:
        raise ValueError("chase underdetermined at %s" % missing)
    inter["h4_j2"] = j2.entries[4]
    inter["h3_conormal"] = conormal.entries[3]
    inter["h3_omega_restr"] = omega_restr.entries[3]
    inter["h1_omega_restr"] = omega_restr.entries[1]
    return HodgeResult(omega.entries[1], omega.entries[2], inter)
