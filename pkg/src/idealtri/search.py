"""Exhaustive enumeration at desk scale, and bounded move-graph search.

The enumerator walks every face pairing of a handful of tetrahedra
(optionally leaving a fixed number of faces unglued), validates the
pseudo-manifold axioms, filters by a predicate and deduplicates by
canonical signature, so the result is complete up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .isosig import decode, encode_canonical
from .moves import apply_move, enumerate_moves
from .triangulation import (
    InvalidTriangulation, Triangulation, boundary_surface,
)

_FACE_PERMS = {}


def _perms_fixing(f1, f2):
    key = (f1, f2)
    if key not in _FACE_PERMS:
        from .perms import ALL_PERMS
        _FACE_PERMS[key] = tuple(p for p in ALL_PERMS if p[f1] == f2)
    return _FACE_PERMS[key]


def enumerate_complexes(n, predicate=None, boundary_faces=0):
    """All connected complexes on n tetrahedra, up to isomorphism.

    ``boundary_faces`` fixes the number of unglued faces (0 gives closed
    pseudo-manifolds; None allows any number).  Invalid gluings (broken
    involutions, reversed edges, disconnected results) are skipped;
    ``predicate`` filters the valid ones.  Returns a dict mapping the
    canonical signature to one representative.
    """
    if n > 2:
        raise ValueError("exhaustive enumeration is desk-scale: n <= 2")
    faces = [(t, f) for t in range(n) for f in range(4)]
    results = {}

    def validate(pairs):
        gluings = {}
        for (t1, f1), (t2, f2), perm in pairs:
            gluings[(t1, f1)] = (t2, perm)
        free_count = 4 * n - 2 * len(pairs)
        try:
            tri = Triangulation(n, gluings, closed=(free_count == 0))
            tri.edge_classes
        except InvalidTriangulation:
            return
        if predicate is not None and not predicate(tri):
            return
        sig = encode_canonical(tri)
        if sig not in results:
            results[sig] = tri

    def recurse(unmatched, pairs, free_left):
        if not unmatched:
            if free_left is None or free_left == 0:
                validate(pairs)
            return
        first = unmatched[0]
        rest = unmatched[1:]
        if free_left is None or free_left > 0:
            next_free = None if free_left is None else free_left - 1
            recurse(rest, pairs, next_free)
        for i, other in enumerate(rest):
            remaining = rest[:i] + rest[i + 1:]
            for perm in _perms_fixing(first[1], other[1]):
                recurse(remaining, pairs + [(first, other, perm)], free_left)

    recurse(faces, [], boundary_faces)
    return results


# -- predicates used by the command line and the test suites --------------

def has_interior_degree3_and_torus_boundary(tri):
    """An interior edge of degree three, and exactly two boundary faces
    forming a one-vertex torus: the context in which a degree-three
    edge forces a layered solid torus."""
    free = sum(1 for t in range(tri.n) for f in range(4)
               if tri.gluings[t][f] is None)
    if free != 2:
        return False
    if not any(e.degree == 3 and not e.boundary for e in tri.edge_classes):
        return False
    bs = boundary_surface(tri)
    return (bs["triangles"] == 2 and bs["vertices"] == 1
            and bs["euler"] == 0)


def closed_admissible(tri):
    """Closed, orientable, one vertex with torus link, no low-degree
    edges: the combinatorial shadow of the census filters."""
    if not tri.is_closed or not tri.is_orientable:
        return False
    if len(tri.vertex_classes) != 1:
        return False
    if not tri.vertex_classes[0].is_torus_link:
        return False
    return min(e.degree for e in tri.edge_classes) >= 3


def torus_links_only(tri):
    return (tri.is_closed and tri.is_orientable
            and all(v.is_torus_link for v in tri.vertex_classes))


PREDICATES = {
    "degree3-lst-context": has_interior_degree3_and_torus_boundary,
    "closed-admissible": closed_admissible,
    "torus-links": torus_links_only,
    "all": None,
}


# -- bounded breadth-first search over the move graph ----------------------

@dataclass(frozen=True)
class SearchResult:
    start: str
    reachable: frozenset
    min_tetrahedra: int
    smaller_admissible: tuple    # sigs below the start size passing the filter
    depth_reached: int
    truncated: bool


def bounded_move_search(tri, max_tets, max_depth, max_nodes=200_000,
                        admissible=closed_admissible):
    """Breadth-first exploration of the move graph under a size cap.

    Reports every canonical signature reached, whether any triangulation
    with fewer tetrahedra than the start satisfies the admissibility
    filter, and an explicit truncation flag when a cap cut the search.
    """
    start = encode_canonical(tri)
    seen = {start}
    frontier = [start]
    truncated = False
    depth = 0
    for depth in range(1, max_depth + 1):
        next_frontier = []
        for sig in frontier:
            current = decode(sig)
            for site in enumerate_moves(current):
                if site.kind == "2-3" and current.n + 1 > max_tets:
                    continue
                image = apply_move(current, site)
                new_sig = encode_canonical(image)
                if new_sig in seen:
                    continue
                if len(seen) >= max_nodes:
                    truncated = True
                    break
                seen.add(new_sig)
                next_frontier.append(new_sig)
            if truncated:
                break
        if truncated or not next_frontier:
            frontier = next_frontier
            break
        frontier = next_frontier
    if frontier and not truncated and depth == max_depth:
        truncated = True

    sizes = {}
    smaller = []
    for sig in seen:
        t = decode(sig)
        sizes[sig] = t.n
        if t.n < tri.n and admissible(t):
            smaller.append(sig)
    return SearchResult(
        start=start,
        reachable=frozenset(seen),
        min_tetrahedra=min(sizes.values()),
        smaller_admissible=tuple(sorted(smaller)),
        depth_reached=depth,
        truncated=truncated)


def random_move_walk(tri, steps, rng, max_tets=8, keep=None):
    """A random walk in the move graph, keeping only steps whose result
    passes ``keep``; used to generate varied admissible triangulations."""
    current = tri
    for _ in range(steps):
        sites = enumerate_moves(current)
        rng.shuffle(sites)
        for site in sites:
            if site.kind == "2-3" and current.n + 1 > max_tets:
                continue
            candidate = apply_move(current, site)
            if keep is None or keep(candidate):
                current = candidate
                break
    return current
