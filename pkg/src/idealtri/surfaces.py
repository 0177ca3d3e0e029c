"""Normal surfaces in ideal triangulations.

Coordinates per tetrahedron: four triangle counts (the triangle at
vertex v cuts off that corner) and three quadrilateral counts.  Quad
type i separates the vertex pair {0, i} from the other two vertices,
so it is disjoint from exactly that pair of opposite edges.

The induced cell structure has one 0-cell per intersection point with
an edge, one 1-cell per matched arc in a face, and the discs as
2-cells; the Euler characteristic is computed from these counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import classify_tet_rank1


class SurfaceError(ValueError):
    """Inadmissible or mismatched normal coordinates."""


def quad_type_of_pair(x, y):
    """The quad type disjoint from edge {x,y} (and its opposite)."""
    if x == 0:
        return y
    if y == 0:
        return x
    return ({1, 2, 3} - {x, y}).pop()


def _quad_pairing(i):
    """The vertex pairing induced by quad type i: 0 <-> i, j <-> k."""
    j, k = sorted({1, 2, 3} - {i})
    return {0: i, i: 0, j: k, k: j}


@dataclass(frozen=True)
class NormalSurface:
    """Vectors of triangle and quadrilateral counts per tetrahedron."""

    tri: object
    triangles: tuple   # triangles[t][v]
    quads: tuple       # quads[t][i-1] for quad types 1,2,3

    def __post_init__(self):
        tri = self.tri
        if not tri.is_closed:
            raise SurfaceError("normal surfaces need a closed triangulation")
        if len(self.triangles) != tri.n or len(self.quads) != tri.n:
            raise SurfaceError("coordinate length mismatch")
        for t in range(tri.n):
            if any(c < 0 for c in self.triangles[t] + self.quads[t]):
                raise SurfaceError("negative coordinate")
            if sum(1 for c in self.quads[t] if c) > 1:
                raise SurfaceError(
                    f"two quad types in tetrahedron {t}: not embeddable")
        for fc in tri.face_classes:
            (t, f), (t2, f2) = fc.sides
            perm = tri.gluings[t][f][1]
            for v in range(4):
                if v == f:
                    continue
                if self.arcs(t, f, v) != self.arcs(t2, f2, perm[v]):
                    raise SurfaceError(
                        f"matching equation fails across face class {fc.index}")

    def quad_count(self, t):
        return sum(self.quads[t])

    def arcs(self, t, f, v):
        """Arcs cutting off corner v in face f of tetrahedron t."""
        q = quad_type_of_pair(f, v)
        return self.triangles[t][v] + self.quads[t][q - 1]

    def corner_count(self, t, a, b):
        """Points of the surface on edge {a,b} of tetrahedron t."""
        disjoint = quad_type_of_pair(a, b)
        on_edge = self.quad_count(t) - self.quads[t][disjoint - 1]
        return self.triangles[t][a] + self.triangles[t][b] + on_edge

    def edge_weights(self):
        """Intersection count per edge class; slots must agree."""
        weights = []
        for e in self.tri.edge_classes:
            counts = {self.corner_count(t, a, b) for t, (a, b), _ in e.occurrences}
            if len(counts) != 1:
                raise SurfaceError(f"edge class {e.index} has unequal slot counts")
            weights.append(counts.pop())
        return weights

    @property
    def weight(self):
        return sum(self.edge_weights())

    @property
    def disc_count(self):
        return (sum(sum(row) for row in self.triangles)
                + sum(sum(row) for row in self.quads))

    def coordinate_vector(self):
        """Length-7n integer vector: 4 triangles then 3 quads per tet."""
        out = []
        for t in range(self.tri.n):
            out.extend(self.triangles[t])
            out.extend(self.quads[t])
        return out


def from_coordinates(tri, vector):
    """Build a surface from a length-7n coordinate vector."""
    if len(vector) != 7 * tri.n:
        raise SurfaceError("coordinate vector must have length 7n")
    triangles = []
    quads = []
    for t in range(tri.n):
        chunk = vector[7 * t: 7 * t + 7]
        triangles.append(tuple(chunk[:4]))
        quads.append(tuple(chunk[4:]))
    return NormalSurface(tri=tri, triangles=tuple(triangles), quads=tuple(quads))


def canonical_surface(tri, phi):
    """The normal surface dual to a nonzero colouring: a quadrilateral
    dual to the even opposite pair in each quad-type tetrahedron, a
    triangle at the odd apex in each triangle-type tetrahedron."""
    if phi.is_zero():
        raise SurfaceError("the zero colouring has no canonical surface")
    triangles = [[0, 0, 0, 0] for _ in range(tri.n)]
    quads = [[0, 0, 0] for _ in range(tri.n)]
    for t in range(tri.n):
        kind, data = classify_tet_rank1(tri, phi, t)
        if kind == "q":
            (a, b), _ = data
            quads[t][quad_type_of_pair(a, b) - 1] = 1
        elif kind == "t":
            triangles[t][data] = 1
    surface = NormalSurface(
        tri=tri,
        triangles=tuple(tuple(r) for r in triangles),
        quads=tuple(tuple(r) for r in quads))
    n_odd = len(phi.odd_edges())
    if surface.weight != n_odd:
        raise SurfaceError("canonical surface weight differs from odd edges")
    return surface


def vertex_link_surface(tri, vertex_index=0):
    """The vertex-linking surface: one triangle per corner of the class."""
    triangles = [[0, 0, 0, 0] for _ in range(tri.n)]
    for (t, v) in tri.vertex_classes[vertex_index].corners:
        triangles[t][v] = 1
    return NormalSurface(
        tri=tri,
        triangles=tuple(tuple(r) for r in triangles),
        quads=tuple((0, 0, 0) for _ in range(tri.n)))


def euler_characteristic(surface):
    """chi from the induced cells: edge points - arcs + discs."""
    tri = surface.tri
    vertices = surface.weight
    arcs = 0
    for fc in tri.face_classes:
        t, f = fc.sides[0]
        arcs += sum(surface.arcs(t, f, v) for v in range(4) if v != f)
    return vertices - arcs + surface.disc_count


# ---------------------------------------------------------------------------
# components and orientability

def _disc_sheets(surface):
    sheets = []
    for t in range(surface.tri.n):
        for v in range(4):
            for k in range(surface.triangles[t][v]):
                sheets.append(("tri", t, v, k))
        for i in (1, 2, 3):
            for k in range(surface.quads[t][i - 1]):
                sheets.append(("quad", t, i, k))
    return sheets


def _boundary_cycle(kind, t, label):
    """The boundary of a disc as face -> (entry edge, exit edge)."""
    if kind == "tri":
        v = label
        w1, w2, w3 = [x for x in range(4) if x != v]
        cycle = [(w3, frozenset((v, w1)), frozenset((v, w2))),
                 (w1, frozenset((v, w2)), frozenset((v, w3))),
                 (w2, frozenset((v, w3)), frozenset((v, w1)))]
    else:
        i = label
        j, k = sorted({1, 2, 3} - {i})
        e1, e2 = frozenset((0, j)), frozenset((0, k))
        e3, e4 = frozenset((i, k)), frozenset((i, j))
        cycle = [(i, e1, e2), (j, e2, e3), (0, e3, e4), (k, e4, e1)]
    return {face: (enter, leave) for face, enter, leave in cycle}


def _arc_stack(surface, t, f, v):
    """Disc sheets whose arcs cut corner v in face f, nearest first.

    Parallel copies of a disc are layered along a fixed transverse
    direction: triangle copy 0 sits nearest its vertex, quad copy 0
    nearest the {0, q} side of its partition.  The stack near a corner
    reverses when the corner lies on the far side.
    """
    stack = [("tri", t, v, k) for k in range(surface.triangles[t][v])]
    q = quad_type_of_pair(f, v)
    copies = range(surface.quads[t][q - 1])
    if f != 0 and v != 0:
        # {f, v} is the partition part away from vertex 0: far side first
        copies = reversed(copies)
    stack.extend(("quad", t, q, k) for k in copies)
    return stack


@dataclass(frozen=True)
class SurfaceComponent:
    euler: int
    orientable: bool
    discs: int

    @property
    def is_sphere(self):
        return self.euler == 2


@dataclass(frozen=True)
class SurfaceComponents:
    surface: object
    components: tuple

    @property
    def total_euler(self):
        return sum(c.euler for c in self.components)

    def chi_minus(self):
        return sum(max(0, -c.euler) for c in self.components)

    def has_sphere(self):
        return any(c.is_sphere for c in self.components)


def components(surface):
    """Connected components with Euler characteristic and orientability.

    Orientability is by a two-sheeted orientation cover over the disc
    adjacency graph: a component is non-orientable exactly when its
    cover is connected.
    """
    tri = surface.tri
    sheets = _disc_sheets(surface)
    index = {s: i for i, s in enumerate(sheets)}
    parent = list(range(len(sheets)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    # matched arcs: (sheet_a, sheet_b, parity)
    arcs = []
    for fc in tri.face_classes:
        (t, f), (t2, f2) = fc.sides
        perm = tri.gluings[t][f][1]
        for v in range(4):
            if v == f:
                continue
            side_a = _arc_stack(surface, t, f, v)
            side_b = _arc_stack(surface, t2, f2, perm[v])
            if len(side_a) != len(side_b):
                raise SurfaceError("arc stacks mismatch across a gluing")
            for sa, sb in zip(side_a, side_b):
                cyc_a = _boundary_cycle(sa[0], sa[1], sa[2])
                cyc_b = _boundary_cycle(sb[0], sb[1], sb[2])
                enter_a, leave_a = cyc_a[f]
                enter_b, leave_b = cyc_b[f2]
                image = frozenset(perm[x] for x in enter_a)
                if image == enter_b:
                    parity = 1      # same traversal direction
                elif image == leave_b:
                    parity = -1
                else:
                    raise SurfaceError("arc endpoints scrambled by a gluing")
                arcs.append((index[sa], index[sb], parity))
                union(index[sa], index[sb])

    # orientation cover: eps[sheet] in {+1,-1}; joined arcs must induce
    # opposite directions, so eps_b = -parity * eps_a.
    eps = {}
    adjacency = {}
    for a, b, parity in arcs:
        adjacency.setdefault(a, []).append((b, parity))
        adjacency.setdefault(b, []).append((a, parity))
    orientable_root = {}
    for start in range(len(sheets)):
        if start in eps:
            continue
        eps[start] = 1
        ok = True
        queue = [start]
        while queue:
            x = queue.pop()
            for y, parity in adjacency.get(x, ()):
                val = -parity * eps[x]
                if y in eps:
                    if eps[y] != val:
                        ok = False
                else:
                    eps[y] = val
                    queue.append(y)
        root = find(start)
        orientable_root[root] = orientable_root.get(root, True) and ok

    return _assemble_components(surface, sheets, index, find, arcs,
                                orientable_root)


def _assemble_components(surface, sheets, index, find, arcs, orientable_root):
    tri = surface.tri
    discs = {}
    for s in sheets:
        discs[find(index[s])] = discs.get(find(index[s]), 0) + 1
    arcs_per = {}
    for a, _b, _p in arcs:
        arcs_per[find(a)] = arcs_per.get(find(a), 0) + 1

    # 0-cells: points along each edge class, heights taken from the
    # positive end; each incident slot stacks triangle-at-min, quads,
    # triangle-at-max from the smaller vertex.
    points_per = {}
    weights = surface.edge_weights()
    for e in tri.edge_classes:
        w = weights[e.index]
        if w == 0:
            continue
        roots_at_height = [set() for _ in range(w)]
        for t, (a, b), sign in e.occurrences:
            stack = [("tri", t, a, k) for k in range(surface.triangles[t][a])]
            qt = quad_type_of_pair(a, b)
            for i in (1, 2, 3):
                if i == qt:
                    continue
                # the quad of type i separates a from b; copy 0 sits on
                # the {0, i} side, so the order from a flips when a is
                # on the far side
                copies = range(surface.quads[t][i - 1])
                if a != 0 and a != i:
                    copies = reversed(copies)
                stack.extend(("quad", t, i, k) for k in copies)
            stack.extend(("tri", t, b, k)
                         for k in reversed(range(surface.triangles[t][b])))
            if sign == -1:
                stack.reverse()
            for h, sheet in enumerate(stack):
                roots_at_height[h].add(find(index[sheet]))
        for h in range(w):
            if len(roots_at_height[h]) != 1:
                raise SurfaceError("edge point meets several components")
            root = roots_at_height[h].pop()
            points_per[root] = points_per.get(root, 0) + 1

    comps = []
    for root in sorted(discs):
        chi = points_per.get(root, 0) - arcs_per.get(root, 0) + discs[root]
        comps.append(SurfaceComponent(
            euler=chi,
            orientable=orientable_root.get(root, True),
            discs=discs[root]))
    return SurfaceComponents(surface=surface, components=tuple(comps))


def chi_minus(surface):
    """Sum of max(0, -chi) over components; an upper bound for the norm
    of the class the surface represents."""
    comps = components(surface)
    return comps.chi_minus()
