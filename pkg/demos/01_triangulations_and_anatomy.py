"""Ideal triangulations as face-paired tetrahedra.

Builds the two-tetrahedron once-punctured torus bundle, then walks
through the derived combinatorics: edge classes and degrees, vertex
links, orientability, face types, and the anatomy checks a minimal
triangulation has to pass.
"""

from idealtri import (
    InvalidTriangulation, anatomy_report, build, build_bundle,
    classify_faces, degree_histogram, face_type_counts,
)

bundle = build_bundle("RL")
tri = bundle.tri
print(f"monodromy word RL -> {tri}")

print("\nedge classes:")
for e in tri.edge_classes:
    print(f"  edge {e.index}: degree {e.degree}, "
          f"occurrences {[(t, pair) for t, pair, _ in e.occurrences]}")
print("degree histogram:", degree_histogram(tri))
print("sum of degrees = 6n:", sum(e.degree for e in tri.edge_classes) == 6 * tri.n)

print("\nvertex links:")
for v in tri.vertex_classes:
    print(f"  vertex {v.index}: {len(v.corners)} corners, "
          f"chi = {v.link_euler}, orientable = {v.link_orientable} "
          f"-> torus cusp: {v.is_torus_link}")

print("\norientable:", tri.is_orientable)

print("\nface types (two edge classes force a repeated class per face):")
for index, face_type in classify_faces(tri).items():
    print(f"  face class {index}: {face_type.value}")
print("counts:", {ft.value: c for ft, c in face_type_counts(tri).items() if c})

print("\nanatomy report:")
for key, value in anatomy_report(tri).items():
    print(f"  {key}: {value}")

print("\ninvalid gluings are rejected up front:")
try:
    build(1, {}, closed=True)
except InvalidTriangulation as exc:
    print("  unglued face:", exc)
try:
    build(1, {(0, 0): (0, (0, 1, 2, 3))}, closed=False)
except InvalidTriangulation as exc:
    print("  self-gluing:", exc)
try:
    bad = build(2, {(0, 0): (1, (1, 0, 2, 3)), (1, 1): (0, (0, 1, 3, 2))},
                closed=False)
except InvalidTriangulation as exc:
    print("  broken involution:", exc)
