"""Parsers for the on-disk fixture formats.

All files are UTF-8 text with '#' comments.  Variable headers accept
range shorthand like `x1..x7`.
"""

from __future__ import annotations

from fractions import Fraction

from .cohomology import TwistSum
from .pfaffian import SkewPolyMatrix
from .polynomial import PolyRing
from .simplicial import load_triangulation
from .toric import AmbientLattice, Fan


def _lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def expand_var_names(tokens):
    names = []
    for tok in tokens:
        if ".." in tok:
            start, end = tok.split("..")
            prefix = start.rstrip("0123456789")
            if not end.startswith(prefix):
                raise ValueError("range %r mixes prefixes" % tok)
            lo = int(start[len(prefix):])
            hi = int(end[len(prefix):])
            names.extend("%s%d" % (prefix, i) for i in range(lo, hi + 1))
        else:
            names.append(tok)
    return names


def geometry_and_params(names):
    """Split a variable list on the x-prefix convention."""
    geometry = [n for n in names if n.startswith("x")]
    params = [n for n in names if not n.startswith("x")]
    return geometry, params


def parse_matrix_file(text):
    """Skew matrix file: `dim d`, `vars ...`, then `entry i j : poly` lines."""
    dim = None
    ring = None
    entries = {}
    for line in _lines(text):
        if line.startswith("dim "):
            dim = int(line.split()[1])
        elif line.startswith("vars "):
            ring = PolyRing(expand_var_names(line.split()[1:]))
        elif line.startswith("entry "):
            head, poly_text = line.split(":", 1)
            parts = head.split()
            i, j = int(parts[1]), int(parts[2])
            if ring is None:
                raise ValueError("entry before vars header")
            if not 1 <= i < j <= dim:
                raise ValueError("entry (%d,%d) must have 1 <= i < j <= dim" % (i, j))
            entries[(i, j)] = ring.parse(poly_text)
        else:
            raise ValueError("unrecognized matrix-file line: %r" % line)
    if dim is None or ring is None:
        raise ValueError("matrix file needs dim and vars headers")
    return SkewPolyMatrix(ring, dim, entries), ring


def parse_vector_file(text):
    """Generator vector file: `len k`, `vars ...`, then `entry i : poly`."""
    length = None
    ring = None
    entries = {}
    for line in _lines(text):
        if line.startswith("len "):
            length = int(line.split()[1])
        elif line.startswith("vars "):
            ring = PolyRing(expand_var_names(line.split()[1:]))
        elif line.startswith("entry "):
            head, poly_text = line.split(":", 1)
            i = int(head.split()[1])
            entries[i] = ring.parse(poly_text)
        else:
            raise ValueError("unrecognized vector-file line: %r" % line)
    if length is None or ring is None:
        raise ValueError("vector file needs len and vars headers")
    return [entries.get(i, ring.zero()) for i in range(1, length + 1)], ring


def parse_fan_file(text):
    """Fan file with `lattice`, `rays`, `sigma` and `cones` blocks.

    Lattice rows are the working-basis vectors in ambient coordinates
    (columns of the change-of-basis matrix); sigma and cone rows list
    1-based ray indices.
    """
    section = None
    lattice_rows = []
    rays = []
    sigma = []
    cones = []
    for line in _lines(text):
        if line in ("lattice", "rays", "sigma", "cones"):
            section = line
            continue
        if section == "lattice":
            lattice_rows.append([Fraction(tok) for tok in line.split()])
        elif section == "rays":
            rays.append(tuple(int(tok) for tok in line.split()))
        elif section == "sigma":
            sigma.extend(int(tok) - 1 for tok in line.split())
        elif section == "cones":
            cones.append(tuple(int(tok) - 1 for tok in line.split()))
        else:
            raise ValueError("data before any section header: %r" % line)
    lattice = AmbientLattice(lattice_rows)
    return Fan(lattice, rays, cones, sigma)


def parse_monomial_file(text):
    """`monomials` and `invariant_monomials` blocks of exponent rows."""
    section = None
    out = {"monomials": [], "invariant_monomials": []}
    for line in _lines(text):
        if line in out:
            section = line
            continue
        if section is None:
            raise ValueError("data before any section header: %r" % line)
        out[section].append(tuple(int(tok) for tok in line.split()))
    return out["monomials"], out["invariant_monomials"]


def parse_component_table(text):
    """Rows `label ray type chi`, ray comma-separated in the working basis."""
    rows = []
    for line in _lines(text):
        label, ray_text, type_tag, chi = line.split()
        ray = tuple(int(tok) for tok in ray_text.split(","))
        rows.append((label, ray, type_tag, int(chi)))
    return rows


def parse_complexes_file(text):
    """Resolution descriptions: `ambient n`, `resolution name`, `term i: ...`.

    Term lines use `(d)^m + (d)^m` twist-sum notation; term 0 is the end
    of the resolution nearest the resolved sheaf.
    """
    ambient = None
    resolutions = {}
    current = None
    for line in _lines(text):
        if line.startswith("ambient "):
            ambient = int(line.split()[1])
        elif line.startswith("resolution "):
            current = line.split()[1]
            resolutions[current] = {}
        elif line.startswith("term "):
            head, body = line.split(":", 1)
            index = int(head.split()[1])
            terms = []
            for chunk in body.split("+"):
                chunk = chunk.strip()
                if not chunk.startswith("(") or ")^" not in chunk:
                    raise ValueError("malformed twist term %r" % chunk)
                d_text, m_text = chunk[1:].split(")^")
                terms.append((int(d_text), int(m_text)))
            resolutions[current][index] = TwistSum(tuple(terms), ambient)
        else:
            raise ValueError("unrecognized complexes-file line: %r" % line)
    out = {}
    for name, terms in resolutions.items():
        out[name] = [terms[i] for i in sorted(terms)]
    return out


def read_triangulation(path):
    return load_triangulation(path.read_text())
