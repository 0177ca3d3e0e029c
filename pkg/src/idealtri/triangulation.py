"""Face-paired tetrahedra and their derived combinatorics.

A triangulation is a set of ``n`` tetrahedra, labelled ``0..n-1``, with
vertex labels ``0..3``.  Face ``f`` of a tetrahedron is the triangle
spanned by the three vertices other than ``f``.  A gluing attaches face
``f`` of tetrahedron ``t`` to face ``perm[f]`` of tetrahedron ``t2``,
where ``perm`` maps all four vertex labels of ``t`` to those of ``t2``.

Quotients are only accepted when the projection is injective on the
interior of every simplex: faces may not be glued to themselves, and an
edge identified with itself in reverse is rejected when edge classes
are computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .perms import compose, inverse, is_perm, sign


class InvalidTriangulation(ValueError):
    """The gluing data violates the pseudo-manifold axioms."""


class InvalidEdge(InvalidTriangulation):
    """An edge is identified with itself in reverse."""


@dataclass(frozen=True)
class EdgeClass:
    """An orbit of tetrahedron edges under the gluing maps.

    Each occurrence is ``(tet, (a, b), sign)`` with ``a < b``; the sign
    records whether the direction ``a -> b`` agrees (+1) or disagrees
    (-1) with the orientation of the class.  The lexicographically
    least occurrence is positively directed.
    """

    index: int
    occurrences: tuple  # ((tet, (a, b), sign), ...)
    boundary: bool

    @property
    def degree(self):
        return len(self.occurrences)

    def slots(self):
        return [(t, pair) for t, pair, _ in self.occurrences]


@dataclass(frozen=True)
class VertexClass:
    """An orbit of tetrahedron corners, with its link surface data."""

    index: int
    corners: tuple  # ((tet, vertex), ...)
    link_euler: int
    link_orientable: bool
    link_closed: bool

    @property
    def is_torus_link(self):
        return self.link_closed and self.link_euler == 0 and self.link_orientable


class FaceType(Enum):
    TRIANGLE = "triangle"
    CONE = "cone"
    MOEBIUS = "moebius"
    THREEFOLD = "threefold"
    DUNCE = "dunce"


@dataclass(frozen=True)
class FaceClass:
    index: int
    sides: tuple        # ((t, f),) or ((t, f), (t2, f2))
    boundary: bool


class Triangulation:
    """An immutable collection of face-paired tetrahedra.

    ``gluings`` may list each gluing from one side or both; a missing
    reverse entry is filled in from the involution, a conflicting one
    is an error.
    """

    def __init__(self, n, gluings, closed=True):
        if n < 1:
            raise InvalidTriangulation("need at least one tetrahedron")
        table = [[None] * 4 for _ in range(n)]
        items = gluings.items() if hasattr(gluings, "items") else gluings
        for key, target in items:
            t, f = key
            if not (0 <= t < n and 0 <= f < 4):
                raise InvalidTriangulation(f"face ({t},{f}) out of range")
            if target is None:
                continue
            t2, perm = target
            perm = tuple(perm)
            if not (0 <= t2 < n):
                raise InvalidTriangulation(f"target tetrahedron {t2} out of range")
            if not is_perm(perm):
                raise InvalidTriangulation(f"gluing of ({t},{f}) is not a permutation")
            entry = (t2, perm)
            if table[t][f] is not None and table[t][f] != entry:
                raise InvalidTriangulation(f"conflicting gluings for face ({t},{f})")
            table[t][f] = entry

        for t in range(n):
            for f in range(4):
                if table[t][f] is None:
                    continue
                t2, perm = table[t][f]
                f2 = perm[f]
                if t2 == t and f2 == f:
                    raise InvalidTriangulation(
                        f"face ({t},{f}) glued to itself")
                back = (t, inverse(perm))
                if table[t2][f2] is None:
                    table[t2][f2] = back
                elif table[t2][f2] != back:
                    raise InvalidTriangulation(
                        f"gluing involution violated at face ({t2},{f2})")

        if closed:
            for t in range(n):
                for f in range(4):
                    if table[t][f] is None:
                        raise InvalidTriangulation(
                            f"face ({t},{f}) unglued in a closed triangulation")

        self.n = n
        self.gluings = tuple(tuple(row) for row in table)

        # connectivity
        seen = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for f in range(4):
                if self.gluings[t][f] is not None:
                    t2 = self.gluings[t][f][0]
                    if t2 not in seen:
                        seen.add(t2)
                        stack.append(t2)
        if len(seen) != n:
            raise InvalidTriangulation("triangulation is not connected")

    # -- basic accessors -------------------------------------------------

    def gluing(self, t, f):
        return self.gluings[t][f]

    @cached_property
    def is_closed(self):
        return all(g is not None for row in self.gluings for g in row)

    def __eq__(self, other):
        return (isinstance(other, Triangulation)
                and self.n == other.n and self.gluings == other.gluings)

    def __hash__(self):
        return hash((self.n, self.gluings))

    def __repr__(self):
        kind = "closed" if self.is_closed else "bounded"
        return f"<Triangulation: {self.n} tetrahedra, {kind}>"

    # -- derived classes -------------------------------------------------

    @cached_property
    def edge_classes(self):
        """Edge orbits with direction signs; raises InvalidEdge on a
        reversed self-identification."""
        classes = []
        slot_class = {}
        for t0 in range(self.n):
            for a0 in range(4):
                for b0 in range(a0 + 1, 4):
                    if (t0, a0, b0) in slot_class:
                        continue
                    # BFS over ordered pairs, seeded positively at the
                    # lexicographically least slot of the orbit.
                    signs = {(t0, a0, b0): 1}
                    queue = [(t0, a0, b0)]
                    while queue:
                        t, a, b = queue.pop()
                        lo, hi = min(a, b), max(a, b)
                        s = signs[(t, lo, hi)] if (a, b) == (lo, hi) else -signs[(t, lo, hi)]
                        for f in range(4):
                            if f == a or f == b:
                                continue
                            g = self.gluings[t][f]
                            if g is None:
                                continue
                            t2, perm = g
                            a2, b2 = perm[a], perm[b]
                            lo2, hi2 = min(a2, b2), max(a2, b2)
                            s2 = s if (a2, b2) == (lo2, hi2) else -s
                            key = (t2, lo2, hi2)
                            if key in signs:
                                if signs[key] != s2:
                                    raise InvalidEdge(
                                        f"edge ({t0},{{{a0},{b0}}}) identified "
                                        "with itself in reverse")
                            else:
                                signs[key] = s2
                                queue.append((t2, a2, b2))
                    occs = sorted(signs.items())
                    boundary = any(
                        self.gluings[t][f] is None
                        for (t, a, b), _ in occs
                        for f in range(4) if f != a and f != b)
                    cls = EdgeClass(
                        index=len(classes),
                        occurrences=tuple((t, (a, b), s) for (t, a, b), s in occs),
                        boundary=boundary)
                    classes.append(cls)
                    for (t, a, b), _ in occs:
                        slot_class[(t, a, b)] = cls.index
        self._edge_slot_class = slot_class
        return tuple(classes)

    def edge_class_of(self, t, a, b):
        """Index of the edge class containing edge {a,b} of tetrahedron t."""
        self.edge_classes
        return self._edge_slot_class[(t, min(a, b), max(a, b))]

    def edge_sign_of(self, t, a, b):
        """Sign of the direction a -> b of the given slot."""
        cls = self.edge_classes[self.edge_class_of(t, a, b)]
        for tt, (lo, hi), s in cls.occurrences:
            if tt == t and {lo, hi} == {a, b}:
                return s if (a, b) == (lo, hi) else -s
        raise KeyError((t, a, b))

    @cached_property
    def vertex_classes(self):
        """Vertex orbits together with link Euler characteristic and
        orientability (via orientation propagation over link triangles)."""
        corner_class = {}
        orbits = []
        for t0 in range(self.n):
            for v0 in range(4):
                if (t0, v0) in corner_class:
                    continue
                orbit = {(t0, v0)}
                queue = [(t0, v0)]
                while queue:
                    t, v = queue.pop()
                    for f in range(4):
                        if f == v:
                            continue
                        g = self.gluings[t][f]
                        if g is None:
                            continue
                        t2, perm = g
                        key = (t2, perm[v])
                        if key not in orbit:
                            orbit.add(key)
                            queue.append(key)
                idx = len(orbits)
                orbits.append(sorted(orbit))
                for c in orbit:
                    corner_class[c] = idx

        # Corner-of-link-triangle orbits: (t, v, w) is the corner of the
        # link triangle at (t, v) sitting on edge {v, w}.
        end_class = {}
        n_end_orbits = [0] * len(orbits)
        for t0 in range(self.n):
            for v0 in range(4):
                for w0 in range(4):
                    if v0 == w0 or (t0, v0, w0) in end_class:
                        continue
                    orbit = {(t0, v0, w0)}
                    queue = [(t0, v0, w0)]
                    while queue:
                        t, v, w = queue.pop()
                        for f in range(4):
                            if f == v or f == w:
                                continue
                            g = self.gluings[t][f]
                            if g is None:
                                continue
                            t2, perm = g
                            key = (t2, perm[v], perm[w])
                            if key not in orbit:
                                orbit.add(key)
                                queue.append(key)
                    vi = corner_class[(t0, v0)]
                    n_end_orbits[vi] += 1
                    for c in orbit:
                        end_class[c] = True

        # Sides of link triangles: (t, v, f) lies in face f; it is glued
        # to (t2, perm[v], perm[f]) when face f is glued.
        classes = []
        for idx, orbit in enumerate(orbits):
            faces = len(orbit)
            glued_sides = 0
            free_sides = 0
            for (t, v) in orbit:
                for f in range(4):
                    if f == v:
                        continue
                    if self.gluings[t][f] is None:
                        free_sides += 1
                    else:
                        glued_sides += 1
            edges = glued_sides // 2 + free_sides
            euler = n_end_orbits[idx] - edges + faces
            orientable = self._link_orientable(orbit)
            classes.append(VertexClass(
                index=idx,
                corners=tuple(orbit),
                link_euler=euler,
                link_orientable=orientable,
                link_closed=(free_sides == 0)))
        self._corner_class = corner_class
        return tuple(classes)

    def _link_orientable(self, orbit):
        # Reference orientation of the link triangle at (t, v): the cyclic
        # order of its corner labels sorted increasingly.
        def successor(v, x):
            labels = [i for i in range(4) if i != v]
            return labels[(labels.index(x) + 1) % 3]

        eps = {orbit[0]: 1}
        queue = [orbit[0]]
        ok = True
        while queue:
            t, v = queue.pop()
            labels = [i for i in range(4) if i != v]
            for f in labels:
                g = self.gluings[t][f]
                if g is None:
                    continue
                t2, perm = g
                v2 = perm[v]
                x, y = [i for i in labels if i != f]
                d_a = 1 if successor(v, x) == y else -1
                d_b = 1 if successor(v2, perm[x]) == perm[y] else -1
                val = -eps[(t, v)] * d_a * d_b
                key = (t2, v2)
                if key in eps:
                    if eps[key] != val:
                        ok = False
                else:
                    eps[key] = val
                    queue.append(key)
        return ok

    def vertex_class_of(self, t, v):
        self.vertex_classes
        return self._corner_class[(t, v)]

    @cached_property
    def orientation_signs(self):
        """Coherent orientation signs per tetrahedron, or None."""
        signs = {0: 1}
        queue = [0]
        while queue:
            t = queue.pop()
            for f in range(4):
                g = self.gluings[t][f]
                if g is None:
                    continue
                t2, perm = g
                val = -sign(perm) * signs[t]
                if t2 in signs:
                    if signs[t2] != val:
                        return None
                else:
                    signs[t2] = val
                    queue.append(t2)
        return tuple(signs[t] for t in range(self.n))

    @cached_property
    def is_orientable(self):
        return self.orientation_signs is not None

    @cached_property
    def face_classes(self):
        classes = []
        seen = set()
        for t in range(self.n):
            for f in range(4):
                if (t, f) in seen:
                    continue
                g = self.gluings[t][f]
                if g is None:
                    classes.append(FaceClass(len(classes), ((t, f),), True))
                    seen.add((t, f))
                else:
                    t2, perm = g
                    f2 = perm[f]
                    classes.append(FaceClass(len(classes), ((t, f), (t2, f2)), False))
                    seen.add((t, f))
                    seen.add((t2, f2))
        return tuple(classes)


def build(n, gluings, closed=True):
    """Validate gluing data and construct a Triangulation."""
    return Triangulation(n, gluings, closed=closed)


def classify_face(tri, t, f):
    """Type of face f of tetrahedron t under the edge identifications."""
    verts = [v for v in range(4) if v != f]
    a, b, c = verts
    # Directed boundary cycle a -> b -> c -> a.
    cycle = [(a, b), (b, c), (c, a)]
    cls = [tri.edge_class_of(t, x, y) for x, y in cycle]
    sgn = [tri.edge_sign_of(t, x, y) for x, y in cycle]
    distinct = len(set(cls))
    if distinct == 3:
        return FaceType.TRIANGLE
    if distinct == 1:
        if sgn[0] == sgn[1] == sgn[2]:
            return FaceType.THREEFOLD
        return FaceType.DUNCE
    # Exactly one pair of edges identified.  For consecutive directed
    # boundary edges in one class, equal signs slide the shared vertex
    # along (Moebius); opposite signs pin it (cone).
    for i in range(3):
        j = (i + 1) % 3
        if cls[i] == cls[j]:
            return FaceType.MOEBIUS if sgn[i] == sgn[j] else FaceType.CONE
    raise AssertionError("unreachable")


def classify_faces(tri):
    """Map each face class to its FaceType."""
    return {fc.index: classify_face(tri, *fc.sides[0]) for fc in tri.face_classes}


def face_type_counts(tri):
    counts = {ft: 0 for ft in FaceType}
    for ft in classify_faces(tri).values():
        counts[ft] += 1
    return counts


def degree_histogram(tri):
    hist = {}
    for e in tri.edge_classes:
        hist[e.degree] = hist.get(e.degree, 0) + 1
    return dict(sorted(hist.items()))


def anatomy_report(tri):
    """Degree and face-type anatomy, with the necessary conditions a
    minimal triangulation must satisfy."""
    hist = degree_histogram(tri)
    counts = face_type_counts(tri)
    min_degree = min(hist)
    report = {
        "tetrahedra": tri.n,
        "edges": len(tri.edge_classes),
        "min_edge_degree": min_degree,
        "degree_histogram": hist,
        "face_types": {ft.value: counts[ft] for ft in FaceType},
        "no_degree_one_edge": 1 not in hist,
        "no_degree_two_edge": 2 not in hist,
        "no_threefold_face": counts[FaceType.THREEFOLD] == 0,
        "no_dunce_face": counts[FaceType.DUNCE] == 0,
    }
    report["passes_minimal_anatomy"] = (
        report["no_degree_one_edge"] and report["no_degree_two_edge"]
        and report["no_threefold_face"] and report["no_dunce_face"])
    return report


def boundary_surface(tri):
    """Cell counts of the boundary surface built from unglued faces.

    Returns (vertices, edges, triangles, euler) of the surface swept out
    by the boundary faces, or None for a closed triangulation.
    """
    free = [(t, f) for t in range(tri.n) for f in range(4)
            if tri.gluings[t][f] is None]
    if not free:
        return None
    free_set = set(free)

    # Boundary edge slots: (t, f, {x, y}) for each edge of each free face.
    # Two slots are identified when they belong to the same edge class and
    # are connected through the interior around that edge: walk around the
    # edge class from one free face to the next.
    def walk(t, f, x, y):
        # Rotate around edge {x,y} starting through the other face.
        while True:
            others = [h for h in range(4) if h not in (x, y, f)]
            g = others[0]
            glu = tri.gluings[t][g]
            if glu is None:
                return (t, g, x, y)
            t2, perm = glu
            t, f, x, y = t2, perm[g], perm[x], perm[y]

    slot_ids = {}
    pair_count = 0
    for (t, f) in free:
        verts = [v for v in range(4) if v != f]
        for i in range(3):
            x, y = verts[i], verts[(i + 1) % 3]
            key = (t, f, min(x, y), max(x, y))
            if key in slot_ids:
                continue
            t2, g2, x2, y2 = walk(t, f, x, y)
            key2 = (t2, g2, min(x2, y2), max(x2, y2))
            assert (t2, g2) in free_set
            slot_ids[key] = pair_count
            slot_ids[key2] = pair_count
            pair_count += 1
    edges = pair_count

    # Boundary vertex corners: (t, f, v) for v a vertex of the free face.
    def corner_walk(t, f, v):
        # All corners identified with (t, f, v) across boundary edges.
        seen = {(t, f, v)}
        stack = [(t, f, v)]
        while stack:
            tt, ff, vv = stack.pop()
            for u in range(4):
                if u == ff or u == vv:
                    continue
                t2, g2, v2, _ = walk(tt, ff, vv, u)
                key = (t2, g2, v2)
                if key not in seen:
                    seen.add(key)
                    stack.append(key)
        return seen

    corner_class = {}
    n_vertices = 0
    for (t, f) in free:
        for v in range(4):
            if v == f or (t, f, v) in corner_class:
                continue
            orbit = corner_walk(t, f, v)
            for c in orbit:
                corner_class[c] = n_vertices
            n_vertices += 1

    triangles = len(free)
    euler = n_vertices - edges + triangles
    return {"vertices": n_vertices, "edges": edges,
            "triangles": triangles, "euler": euler}


def find_isomorphism(t1, t2):
    """A combinatorial isomorphism t1 -> t2, or None.

    Returns (tet_map, vertex_maps): tetrahedron t of t1 corresponds to
    tet_map[t] of t2 with vertices relabelled by vertex_maps[t].
    """
    if t1.n != t2.n:
        return None
    from .perms import ALL_PERMS
    for t0 in range(t2.n):
        for p0 in ALL_PERMS:
            tet_map = {0: t0}
            vmaps = {0: p0}
            queue = [0]
            ok = True
            while queue and ok:
                t = queue.pop()
                for f in range(4):
                    g1 = t1.gluings[t][f]
                    img_t = tet_map[t]
                    img_f = vmaps[t][f]
                    g2 = t2.gluings[img_t][img_f]
                    if g1 is None and g2 is None:
                        continue
                    if (g1 is None) != (g2 is None):
                        ok = False
                        break
                    s1, perm1 = g1
                    s2, perm2 = g2
                    req = compose(perm2, compose(vmaps[t], inverse(perm1)))
                    if s1 in tet_map:
                        if tet_map[s1] != s2 or vmaps[s1] != req:
                            ok = False
                            break
                    else:
                        tet_map[s1] = s2
                        vmaps[s1] = req
                        queue.append(s1)
            if ok and len(tet_map) == t1.n and len(set(tet_map.values())) == t1.n:
                return ([tet_map[t] for t in range(t1.n)],
                        [vmaps[t] for t in range(t1.n)])
    return None


def subcomplex(tri, tets):
    """The subcomplex spanned by the given tetrahedra: gluings between
    them are kept, all other faces become free.

    Returns (sub, index_of) where index_of maps old to new indices.
    Vertex labels are unchanged.
    """
    tets = sorted(set(tets))
    index_of = {t: i for i, t in enumerate(tets)}
    gluings = {}
    for t in tets:
        for f in range(4):
            g = tri.gluings[t][f]
            if g is not None and g[0] in index_of:
                gluings[(index_of[t], f)] = (index_of[g[0]], g[1])
    return Triangulation(len(tets), gluings, closed=False), index_of


def relabelled(tri, tet_map, vertex_maps):
    """Apply an isomorphism: tetrahedron t becomes tet_map[t], with its
    vertices relabelled by vertex_maps[t]."""
    gluings = {}
    for t in range(tri.n):
        for f in range(4):
            g = tri.gluings[t][f]
            if g is None:
                continue
            t2, perm = g
            new_perm = compose(vertex_maps[t2], compose(perm, inverse(vertex_maps[t])))
            gluings[(tet_map[t], vertex_maps[t][f])] = (tet_map[t2], new_perm)
    return Triangulation(tri.n, gluings, closed=tri.is_closed)
