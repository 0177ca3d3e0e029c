"""GF(2) edge colourings satisfying triangle parity, and the tetrahedron
taxonomies they induce.

A cocycle assigns 0 or 1 to every edge class so that the three edge
values of each face sum to zero mod 2 (counted with multiplicity when a
face meets an edge class more than once).  The solution space of this
parity system is the relative first cohomology of the pseudo-manifold
modulo its vertices, which is isomorphic to the second homology of the
cusped manifold with Z2 coefficients.

Colourings are stored as bitmasks over edge-class indices.
"""

from __future__ import annotations

from dataclasses import dataclass


class ParityError(ValueError):
    """An edge colouring violates the triangle parity constraint."""


class IdentityError(AssertionError):
    """A counting identity failed: an implementation bug somewhere."""


@dataclass(frozen=True)
class Cocycle:
    """A parity-respecting GF(2) edge colouring, as a bitmask."""

    tri: object
    mask: int

    def __post_init__(self):
        for row in _parity_rows(self.tri):
            if bin(self.mask & row).count("1") % 2:
                raise ParityError("face with odd edge-colour sum")

    def value(self, edge_index):
        return (self.mask >> edge_index) & 1

    def odd_edges(self):
        return [e.index for e in self.tri.edge_classes if self.value(e.index)]

    def is_zero(self):
        return self.mask == 0

    def __add__(self, other):
        if other.tri is not self.tri:
            raise ValueError("cocycles on different triangulations")
        return Cocycle(self.tri, self.mask ^ other.mask)


def _parity_rows(tri):
    """One bitmask per face class: edges appearing an odd number of times."""
    cached = getattr(tri, "_parity_rows", None)
    if cached is not None:
        return cached
    rows = []
    for fc in tri.face_classes:
        t, f = fc.sides[0]
        verts = [v for v in range(4) if v != f]
        row = 0
        for i in range(3):
            x, y = verts[i], verts[(i + 1) % 3]
            row ^= 1 << tri.edge_class_of(t, x, y)
        rows.append(row)
    tri._parity_rows = rows
    return rows


@dataclass(frozen=True)
class CocycleBasis:
    tri: object
    vectors: tuple  # of Cocycle

    @property
    def rank(self):
        return len(self.vectors)

    def elements(self):
        """All cocycles in the span, the zero colouring first."""
        out = [Cocycle(self.tri, 0)]
        for v in self.vectors:
            out.extend(Cocycle(self.tri, c.mask ^ v.mask) for c in list(out))
        return out

    def nonzero_elements(self):
        return [c for c in self.elements() if not c.is_zero()]


def cocycle_space(tri):
    """Basis of the parity solution space by GF(2) elimination.

    Pivoting is by increasing edge index, so the basis is deterministic.
    """
    m = len(tri.edge_classes)
    rows = _parity_rows(tri)
    pivot_of_col = {}
    for row in rows:
        for col, prow in pivot_of_col.items():
            if (row >> col) & 1:
                row ^= prow
        if row:
            col = (row & -row).bit_length() - 1
            # normalise previous rows against the new pivot
            for c in list(pivot_of_col):
                if (pivot_of_col[c] >> col) & 1:
                    pivot_of_col[c] ^= row
            pivot_of_col[col] = row
    # null space: one basis vector per free column
    free_cols = [c for c in range(m) if c not in pivot_of_col]
    basis = []
    for fc in free_cols:
        mask = 1 << fc
        for col, row in pivot_of_col.items():
            if (row >> fc) & 1:
                mask |= 1 << col
        basis.append(Cocycle(tri, mask))
    basis.sort(key=lambda c: c.mask)
    return CocycleBasis(tri=tri, vectors=tuple(basis))


# ---------------------------------------------------------------------------
# rank-1 taxonomy

def _tet_odd_slots(tri, phi, t):
    return {(a, b) for a in range(4) for b in range(a + 1, 4)
            if phi.value(tri.edge_class_of(t, a, b))}


def classify_tet_rank1(tri, phi, t):
    """('q', even opposite pair) | ('t', apex) | ('e', None)."""
    odd = _tet_odd_slots(tri, phi, t)
    if not odd:
        return ("e", None)
    if len(odd) == 4:
        even = [(a, b) for a in range(4) for b in range(a + 1, 4)
                if (a, b) not in odd]
        (a, b), (c, d) = even
        if {a, b} | {c, d} == {0, 1, 2, 3}:
            return ("q", ((a, b), (c, d)))
    if len(odd) == 3:
        for v in range(4):
            if all(v in pair for pair in odd):
                return ("t", v)
    raise ParityError(f"tetrahedron {t} matches no rank-1 type")


def classify_rank1(tri, phi):
    """Counts of quadrilateral, triangle and empty tetrahedra."""
    counts = {"q": 0, "t": 0, "e": 0}
    for t in range(tri.n):
        kind, _ = classify_tet_rank1(tri, phi, t)
        counts[kind] += 1
    return counts


# ---------------------------------------------------------------------------
# rank-2 taxonomy

TET_TYPES = ("qtt", "qq", "tt", "empty", "qqq")


@dataclass(frozen=True)
class RankTwoColouring:
    """A pair of independent cocycles with the derived taxonomy.

    edge_labels[e] is 0 for H-even edges and i when phi_i is the unique
    vanishing colouring; tet_types[t] is one of TET_TYPES with its
    sub-type (the distinguished colour index, or None).
    """

    tri: object
    phi: tuple            # (phi1, phi2, phi3)
    edge_labels: tuple
    tet_types: tuple      # ((type, subtype), ...)
    counts: dict
    e0: int               # number of 0-even edges
    e0_weighted: int      # number of their preimages (degree weighted)
    e0_histogram: dict    # degree -> number of 0-even edges

    def quad_of(self, t, i):
        """Quad type carried by surface i in tetrahedron t, or None."""
        kind, data = classify_tet_rank1(self.tri, self.phi[i - 1], t)
        if kind != "q":
            return None
        from .surfaces import quad_type_of_pair
        return quad_type_of_pair(*data[0])


def classify_rank2(tri, phi1, phi2):
    if phi1.is_zero() or phi2.is_zero() or phi1.mask == phi2.mask:
        raise ParityError("colourings do not span a rank-2 subgroup")
    phi3 = phi1 + phi2
    phis = (phi1, phi2, phi3)

    labels = []
    for e in tri.edge_classes:
        vals = (phi1.value(e.index), phi2.value(e.index))
        labels.append({(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3}[vals])

    tet_types = []
    counts = {k: 0 for k in TET_TYPES}
    for t in range(tri.n):
        kinds = tuple(classify_tet_rank1(tri, p, t)[0] for p in phis)
        multiset = "".join(sorted(kinds))
        if multiset == "qqq":
            tet_types.append(("qqq", None))
        elif multiset == "qtt":
            tet_types.append(("qtt", kinds.index("q") + 1))
        elif multiset == "eqq":
            tet_types.append(("qq", kinds.index("e") + 1))
        elif multiset == "ett":
            tet_types.append(("tt", kinds.index("e") + 1))
        elif multiset == "eee":
            tet_types.append(("empty", None))
        else:
            raise ParityError(
                f"tetrahedron {t} has impossible rank-2 pattern {kinds}")
        key = tet_types[-1][0]
        counts[key] += 1

    e0 = sum(1 for lab in labels if lab == 0)
    e0_weighted = sum(tri.edge_classes[i].degree
                      for i, lab in enumerate(labels) if lab == 0)
    hist = {}
    for i, lab in enumerate(labels):
        if lab == 0:
            d = tri.edge_classes[i].degree
            hist[d] = hist.get(d, 0) + 1
    return RankTwoColouring(
        tri=tri, phi=phis, edge_labels=tuple(labels),
        tet_types=tuple(tet_types), counts=counts,
        e0=e0, e0_weighted=e0_weighted, e0_histogram=dict(sorted(hist.items())))


# ---------------------------------------------------------------------------
# counting identities

def even_subcomplex_euler(rc):
    """Euler characteristic of the ideal subcomplex spanned by the
    0-even edges, counted directly from its cells."""
    tri = rc.tri
    even = {e.index for e in tri.edge_classes if rc.edge_labels[e.index] == 0}
    n_edges = len(even)
    n_faces = 0
    for fc in tri.face_classes:
        t, f = fc.sides[0]
        verts = [v for v in range(4) if v != f]
        slots = [tri.edge_class_of(t, verts[i], verts[(i + 1) % 3])
                 for i in range(3)]
        if all(s in even for s in slots):
            n_faces += 1
    n_tets = sum(1 for t in range(tri.n)
                 if all(tri.edge_class_of(t, a, b) in even
                        for a in range(4) for b in range(a + 1, 4)))
    return -n_edges + n_faces - n_tets


def check_identities(rc, chi1, chi2, chi3):
    """Verify the counting identities tying tetrahedron types, 0-even
    edges and the Euler characteristics of the three canonical surfaces.

    Any failure raises IdentityError: the identities are theorems, so a
    failure is an implementation bug, never bad input.
    """
    tri = rc.tri
    n = tri.n
    c = rc.counts
    chis = chi1 + chi2 + chi3
    report = {}

    total = sum(c.values())
    report["type_counts"] = dict(c)
    report["tetrahedra"] = n
    if total != n:
        raise IdentityError("tetrahedron types do not partition the tetrahedra")

    lhs2 = c["tt"] + 2 * c["empty"] - c["qqq"]
    rhs2 = 2 * rc.e0 + chis
    report["eq_types_vs_chi"] = {"lhs": lhs2, "rhs": rhs2, "holds": lhs2 == rhs2}
    if lhs2 != rhs2:
        raise IdentityError(f"type/chi identity fails: {lhs2} != {rhs2}")

    rhs3 = 2 * n - c["qtt"] - c["tt"] + 4 * rc.e0 + 2 * chis
    report["eq_weighted_even_edges"] = {
        "lhs": rc.e0_weighted, "rhs": rhs3, "holds": rc.e0_weighted == rhs3}
    if rc.e0_weighted != rhs3:
        raise IdentityError(
            f"weighted even-edge identity fails: {rc.e0_weighted} != {rhs3}")

    hist = rc.e0_histogram
    e1 = hist.get(1, 0)
    e2 = hist.get(2, 0)
    e3 = hist.get(3, 0)
    high = sum((d - 4) * k for d, k in hist.items() if d >= 5)
    rhs4 = c["qtt"] + c["tt"] - 2 * (n + chis) + high
    report["eq_degree_three_even_edges"] = {
        "lhs": e3, "rhs": rhs4, "low_degree_even_edges": e1 + e2,
        "applicable": e1 == 0 and e2 == 0,
        "holds": e3 == rhs4 - 3 * e1 - 2 * e2,
    }
    if e3 != rhs4 - 3 * e1 - 2 * e2:
        raise IdentityError(
            f"degree-three even-edge identity fails: {e3} != {rhs4}")
    if e1 == 0 and e2 == 0 and e3 != rhs4:
        raise IdentityError("degree-three identity fails in its plain form")

    chi_k = even_subcomplex_euler(rc)
    formula = -rc.e0 + c["tt"] // 2 + c["empty"]
    if c["tt"] % 2:
        # half-integer form: compare doubled values
        if 2 * chi_k != -2 * rc.e0 + c["tt"] + 2 * c["empty"]:
            raise IdentityError("even subcomplex Euler characteristic fails")
    elif chi_k != formula:
        raise IdentityError(
            f"even subcomplex Euler characteristic fails: {chi_k} != {formula}")
    report["even_subcomplex_euler"] = {
        "direct": chi_k, "holds": 2 * chi_k == -2 * rc.e0 + c["tt"] + 2 * c["empty"]}
    report["chi"] = [chi1, chi2, chi3]
    return report


# ---------------------------------------------------------------------------
# the complexity bound certificate

@dataclass(frozen=True)
class BoundCertificate:
    """A rank-2 subgroup whose canonical surfaces are all quadrilateral."""

    tri: object
    subgroup: tuple          # masks of the three nonzero cocycles, sorted
    colouring: RankTwoColouring
    chi: tuple               # Euler characteristics of the three surfaces
    sum_neg_chi: int
    tetrahedra: int
    even_count_check: bool
    orientation_types: tuple  # +1/-1 per tetrahedron


def rank2_subgroups(basis):
    """Each rank-2 subgroup of the span, once (not once per basis)."""
    nonzero = sorted(c.mask for c in basis.nonzero_elements())
    seen = set()
    out = []
    for i, x in enumerate(nonzero):
        for y in nonzero[i + 1:]:
            key = tuple(sorted((x, y, x ^ y)))
            if key not in seen:
                seen.add(key)
                out.append(key)
    return sorted(out)


def qqq_orientation_types(tri, rc):
    """The two oriented sub-types of all-quadrilateral tetrahedra.

    For each tetrahedron the induced boundary orientation of any face
    reads the three edge colours in a cyclic order; the order is the
    same for all four faces and distinguishes the two sub-types.
    Adjacent tetrahedra get opposite sub-types.
    """
    signs = tri.orientation_signs
    if signs is None:
        raise ParityError("orientation types need an orientable triangulation")
    types = []
    for t in range(tri.n):
        face_types = set()
        for f in range(4):
            x, y, z = [v for v in range(4) if v != f]
            if signs[t] * (-1) ** f < 0:
                x, y, z = x, z, y
            cols = (rc.edge_labels[tri.edge_class_of(t, x, y)],
                    rc.edge_labels[tri.edge_class_of(t, y, z)],
                    rc.edge_labels[tri.edge_class_of(t, z, x)])
            face_types.add(+1 if cols in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1)
        if len(face_types) != 1:
            raise IdentityError("face colour cycles disagree within a tetrahedron")
        types.append(face_types.pop())
    for t in range(tri.n):
        for f in range(4):
            t2, _ = tri.gluings[t][f]
            if types[t] == types[t2]:
                raise IdentityError(
                    "adjacent all-quadrilateral tetrahedra share a sub-type")
    return tuple(types)


def bound_certificate(tri):
    """Search the rank-2 subgroups for one with every tetrahedron of
    type qqq; on success the sum of -chi over the three canonical
    surfaces equals the size of the triangulation, which must be even."""
    from .surfaces import canonical_surface, euler_characteristic

    basis = cocycle_space(tri)
    if basis.rank < 2:
        return None
    for subgroup in rank2_subgroups(basis):
        phi1 = Cocycle(tri, subgroup[0])
        phi2 = Cocycle(tri, subgroup[1])
        rc = classify_rank2(tri, phi1, phi2)
        if rc.counts["qqq"] != tri.n:
            continue
        chis = tuple(euler_characteristic(canonical_surface(tri, p))
                     for p in rc.phi)
        total = sum(-x for x in chis)
        if total != tri.n:
            raise IdentityError(
                f"all-quadrilateral colouring with sum(-chi) = {total} != {tri.n}")
        types = qqq_orientation_types(tri, rc)
        if tri.n % 2:
            raise IdentityError("all-quadrilateral certificate with odd size")
        return BoundCertificate(
            tri=tri, subgroup=subgroup, colouring=rc, chi=chis,
            sum_neg_chi=total, tetrahedra=tri.n,
            even_count_check=(tri.n % 2 == 0),
            orientation_types=types)
    return None
