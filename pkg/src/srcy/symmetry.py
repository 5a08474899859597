"""Automorphisms of a complex and their action on deformation parameters."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .deformation import FirstOrderFamily, T1BasisElement
from .polynomial import PolyRing


@dataclass
class PermutationGroup:
    """Explicit list of vertex permutations (dicts label -> label)."""

    vertices: tuple
    elements: list
    generators: list

    @property
    def order(self):
        return len(self.elements)

    def one_line(self, perm):
        return [perm[v] for v in self.vertices]


def automorphism_group(k):
    """All vertex permutations preserving the facet set.

    Brute force over the symmetric group; the fixture complexes have at
    most 8 vertices.  Generators are a greedily chosen minimal subset.
    """
    verts = k.vertices
    facets = k.facets
    elements = []
    for image in permutations(verts):
        perm = dict(zip(verts, image))
        if {frozenset(perm[v] for v in f) for f in facets} == facets:
            elements.append(perm)
    generators = _greedy_generators(verts, elements)
    return PermutationGroup(verts, elements, generators)


def _compose(p, q):
    return {v: p[q[v]] for v in q}


def _closure(verts, gens):
    identity = {v: v for v in verts}
    seen = {tuple(g[v] for v in verts): g for g in [identity]}
    frontier = [identity]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = _compose(g, cur)
            key = tuple(nxt[v] for v in verts)
            if key not in seen:
                seen[key] = nxt
                frontier.append(nxt)
    return list(seen.values())


def _greedy_generators(verts, elements):
    chosen = []
    generated = 1
    for g in sorted(elements, key=lambda p: tuple(p[v] for v in verts)):
        if tuple(g[v] for v in verts) == tuple(verts):
            continue
        if generated == len(elements):
            break
        trial = _closure(verts, chosen + [g])
        if len(trial) > generated:
            chosen.append(g)
            generated = len(trial)
    # drop members that became redundant once later ones were added
    pruned = list(chosen)
    for g in list(pruned):
        rest = [h for h in pruned if h is not g]
        if rest and len(_closure(verts, rest)) == len(elements):
            pruned = rest
    return pruned


# -- action on the T^1 basis -----------------------------------------------------


def act_on_element(perm, elem):
    pairs = sorted((perm[v], e) for v, e in zip(elem.support, elem.a_vector))
    return T1BasisElement(
        tuple(v for v, _ in pairs),
        tuple(e for _, e in pairs),
        frozenset(perm[v] for v in elem.b),
    )


@dataclass
class OrbitPartition:
    blocks: list  # lists of basis indices, each sorted; blocks sorted by min

    @property
    def count(self):
        return len(self.blocks)

    def sizes(self):
        return sorted(len(b) for b in self.blocks)

    def block_of(self, index):
        for i, b in enumerate(self.blocks):
            if index in b:
                return i
        raise KeyError(index)


def orbits_on_t1(group, basis):
    """Orbits of the group action on (a-vector, b) basis elements."""
    index = {elem: i for i, elem in enumerate(basis)}
    parent = list(range(len(basis)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for i, elem in enumerate(basis):
        for g in group.generators or group.elements:
            moved = act_on_element(g, elem)
            if moved not in index:
                raise RuntimeError("group does not preserve the T^1 basis")
            union(i, index[moved])
    blocks = {}
    for i in range(len(basis)):
        blocks.setdefault(find(i), []).append(i)
    return OrbitPartition(sorted(blocks.values(), key=lambda b: b[0]))


def orbit_index_of(partition, basis, support, b, a_vector=None):
    """Block index of the orbit containing the given (a, b) pair."""
    support = tuple(sorted(support))
    b = frozenset(b)
    for i, elem in enumerate(basis):
        if elem.support == support and elem.b == b:
            if a_vector is None or elem.a_vector == tuple(a_vector):
                return partition.block_of(i)
    raise KeyError("no basis element with a=%s, b=%s" % (support, sorted(b)))


def invariant_specialize(family, partition, assignment):
    """Equate parameters along orbits.

    `assignment` maps block index -> new parameter name; unlisted blocks
    are set to zero.  Block indices refer to `partition.blocks`.
    """
    new_params = []
    for block_id in sorted(assignment):
        name = assignment[block_id]
        if name and name not in new_params:
            new_params.append(name)
    xnames = [n for n in family.ring.names if n not in family.params]
    ring = PolyRing(xnames + new_params)
    subs = {}
    for block_id, block in enumerate(partition.blocks):
        name = assignment.get(block_id)
        for i in block:
            subs[family.params[i]] = name
    gens = []
    for poly in family.generators:
        terms = {}
        for e, c in poly.terms.items():
            exps = [0] * ring.nvars
            for i, p in enumerate(e):
                if p == 0:
                    continue
                old = family.ring.names[i]
                if old in subs:
                    new = subs[old]
                    if new is None:
                        exps = None
                        break
                    exps[ring.index[new]] += p
                else:
                    exps[ring.index[old]] += p
            if exps is None:
                continue
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + c
        poly_terms = {e: c for e, c in terms.items() if c}
        gens.append(ring.zero() + _poly(ring, poly_terms))
    return FirstOrderFamily(ring, gens, family.basis, new_params)


def _poly(ring, terms):
    from .polynomial import Poly

    return Poly(ring, terms)
