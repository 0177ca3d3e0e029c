"""Layered solid tori, bistellar moves, and exhaustive enumeration.

The meridian triple (a, b, c) of a layered solid torus evolves under
layering; a degree-three edge inside a triangulation is certified by
matching its two tetrahedra against LST(1,3,4).  The brute-force
enumeration shows that LST(1,3,4) is the only two-tetrahedron complex
with an interior degree-three edge and one-vertex torus boundary.
"""

from idealtri import (
    MoveSite, apply_move, bounded_move_search, build_bundle,
    encode_canonical, enumerate_complexes, enumerate_moves, lst_build,
)
from idealtri.lst import detect_degree3
from idealtri.search import has_interior_degree3_and_torus_boundary

print("layering arithmetic from LST(1,2,3):")
for word in ["", "b", "a", "bb", "ba", "ab"]:
    L = lst_build(word)
    print(f"  word {word!r:5}: LST{L.params.as_tuple()}, {L.tri.n} tetrahedra")

print("\nPachner moves on the two-tetrahedron bundle:")
tri = build_bundle("RL").tri
base = encode_canonical(tri)
site = next(s for s in enumerate_moves(tri) if s.kind == "2-3")
bigger = apply_move(tri, site)
new_edge = bigger.edge_class_of(bigger.n - 3, 0, 1)
print(f"  2-3 at face {site.index}: {tri.n} -> {bigger.n} tetrahedra, "
      f"fresh edge degree {bigger.edge_classes[new_edge].degree}")
back = apply_move(bigger, MoveSite("3-2", new_edge))
print(f"  3-2 back: isomorphic to the original: "
      f"{encode_canonical(back) == base}")

print("\nthe fresh degree-three edge spans three tetrahedra, so it is a "
      "3-2 site, not a layered solid torus:")
certs, failures = detect_degree3(bigger)
for failure in failures:
    print(f"  edge {failure.edge}: {failure.reason}")

print("\nexhaustive enumeration (takes a few seconds):")
found = enumerate_complexes(2, has_interior_degree3_and_torus_boundary,
                            boundary_faces=2)
print(f"  2-tetrahedron complexes with an interior degree-3 edge and "
      f"one-vertex torus boundary: {len(found)}")
print(f"  the one complex is LST(1,3,4): "
      f"{list(found) == [encode_canonical(lst_build('b').tri)]}")

print("\nbounded move search from the two-tetrahedron bundle:")
result = bounded_move_search(tri, max_tets=3, max_depth=8)
print(f"  reachable signatures: {len(result.reachable)}, "
      f"least tetrahedra: {result.min_tetrahedra}, "
      f"smaller admissible: {list(result.smaller_admissible)}, "
      f"truncated: {result.truncated}")
