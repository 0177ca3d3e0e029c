"""Shared generators and local models for the test suites."""

import random

from idealtri import build, decode
from idealtri.monodromy import build_bundle
from idealtri.search import random_move_walk


def admissible_keep(tri):
    """Closed, orientable, torus links, no degree-1/2 edges."""
    if not (tri.is_closed and tri.is_orientable):
        return False
    if not all(v.is_torus_link for v in tri.vertex_classes):
        return False
    return min(e.degree for e in tri.edge_classes) >= 3


SEED_SIGS = [
    "gLLMQbeefffehhqxhqq",
    "iLLLQPcbefgffhhhxxhaqxxqh",
    "cPcbbbiht",
]
SEED_WORDS = ["RRLL", "RLRLRL", "RLLRLL"]


def random_admissible(rng, min_tets=2, max_tets=6, steps=None, rank2_only=False):
    """A random closed orientable torus-link triangulation with no
    degree-1/2 edges and 2..6 tetrahedra, from a move walk off a seed.

    Moves do not change the manifold, so seeding from a rank-2 manifold
    guarantees rank-2 cohomology throughout the walk.
    """
    if not rank2_only and rng.random() < 0.5:
        seed = decode(rng.choice(SEED_SIGS))
    elif rank2_only and rng.random() < 0.25:
        seed = decode(SEED_SIGS[0])
    else:
        seed = build_bundle(rng.choice(SEED_WORDS)).tri
    steps = steps if steps is not None else rng.randrange(0, 5)

    def keep(t):
        return min_tets <= t.n <= max_tets and admissible_keep(t)

    tri = random_move_walk(seed, steps, rng, max_tets=max_tets, keep=keep)
    if not keep(tri):
        # seeds themselves satisfy the filter when within size bounds
        tri = seed if seed.n <= max_tets else decode("cPcbbbiht")
    return tri


def octahedron_model():
    """Four tetrahedra around the edge {u,v}: tet i spans u, v and the
    equator vertices x_i, x_{i+1} (labels 0, 1, 2, 3 in that order)."""
    gluings = {(i, 2): ((i + 1) % 4, (0, 1, 3, 2)) for i in range(4)}
    return build(4, gluings, closed=False)
