"""Canonical and vertex-linking normal surfaces, cell-count Euler
characteristics, components, orientability."""

import random

import pytest

from idealtri import (
    Cocycle, SurfaceError, canonical_surface, chi_minus, cocycle_space,
    components, decode, euler_characteristic, from_coordinates,
    rank2_subgroups, vertex_link_surface,
)
from idealtri.cohomology import classify_rank2
from idealtri.monodromy import build_bundle

from helpers import random_admissible

CENSUS_FIXTURES = [
    "gLLMQbeefffehhqxhqq",
    "iLLLQPcbefgffhhhxxhaqxxqh",
    "iLLLQPcbefgffhhhhhqaxhhxq",
    "iLLwQPcbeefgehhhhhqhhqhqx",
]


def test_zero_cocycle_has_no_canonical_surface():
    tri = decode(CENSUS_FIXTURES[0])
    with pytest.raises(SurfaceError):
        canonical_surface(tri, Cocycle(tri, 0))


def test_two_quad_types_rejected():
    tri = decode("cPcbbbiht")
    with pytest.raises(SurfaceError):
        from_coordinates(tri, [0, 0, 0, 0, 1, 1, 0] + [0] * 7)


def test_vertex_link_is_torus():
    for sig in CENSUS_FIXTURES + ["cPcbbbiht"]:
        tri = decode(sig)
        surface = vertex_link_surface(tri)
        assert euler_characteristic(surface) == 0
        comps = components(surface)
        assert len(comps.components) == 1
        assert comps.components[0].euler == 0
        assert comps.components[0].orientable
        assert comps.chi_minus() == 0


def test_rrll_canonical_surfaces_all_quads():
    tri = build_bundle("RRLL").tri
    for phi in cocycle_space(tri).nonzero_elements():
        surface = canonical_surface(tri, phi)
        assert sum(sum(r) for r in surface.triangles) == 0
        assert sum(sum(r) for r in surface.quads) == 4
        assert surface.weight == len(phi.odd_edges())


def test_rrll_certificate_chi_sum():
    tri = build_bundle("RRLL").tri
    chis = [euler_characteristic(canonical_surface(tri, p))
            for p in cocycle_space(tri).nonzero_elements()]
    assert sum(chis) == -4


def test_canonical_weight_counts_odd_edges():
    rng = random.Random(61)
    for _ in range(15):
        tri = random_admissible(rng)
        for phi in cocycle_space(tri).nonzero_elements():
            surface = canonical_surface(tri, phi)
            assert surface.weight == len(phi.odd_edges())


def test_matching_equations_hold_for_canonical_surfaces():
    # construction validates them; make the check visible
    rng = random.Random(67)
    for _ in range(10):
        tri = random_admissible(rng)
        for phi in cocycle_space(tri).nonzero_elements():
            surface = canonical_surface(tri, phi)
            for fc in tri.face_classes:
                (t, f), (t2, f2) = fc.sides
                perm = tri.gluings[t][f][1]
                for v in range(4):
                    if v != f:
                        assert surface.arcs(t, f, v) == surface.arcs(t2, f2, perm[v])


def test_chi_from_cells_agrees_with_type_counts():
    # chi(S1)+chi(S2)+chi(S3) + n_qqq = -2e + n_tt + 2n_empty
    rng = random.Random(71)
    for _ in range(20):
        tri = random_admissible(rng)
        for sg in rank2_subgroups(cocycle_space(tri)):
            rc = classify_rank2(tri, Cocycle(tri, sg[0]), Cocycle(tri, sg[1]))
            chis = sum(euler_characteristic(canonical_surface(tri, p))
                       for p in rc.phi)
            assert (chis + rc.counts["qqq"]
                    == -2 * rc.e0 + rc.counts["tt"] + 2 * rc.counts["empty"])


def test_components_edge_incidence_at_most_once_for_canonical():
    # each component of a canonical surface meets each edge at most
    # once, so none can be a sphere
    rng = random.Random(73)
    for _ in range(10):
        tri = random_admissible(rng)
        for phi in cocycle_space(tri).nonzero_elements():
            surface = canonical_surface(tri, phi)
            assert all(w <= 1 for w in surface.edge_weights())
            comps = components(surface)
            assert not comps.has_sphere()
            assert comps.total_euler == euler_characteristic(surface)


def test_rrll_certificate_surfaces_are_one_sided():
    tri = build_bundle("RRLL").tri
    non_orientable = 0
    for phi in cocycle_space(tri).nonzero_elements():
        comps = components(canonical_surface(tri, phi))
        non_orientable += sum(1 for c in comps.components if not c.orientable)
    assert non_orientable >= 1


def test_chi_minus_definition():
    tri = decode(CENSUS_FIXTURES[0])
    surface = vertex_link_surface(tri)
    assert chi_minus(surface) == 0
    cert_tri = build_bundle("RRLL").tri
    for phi in cocycle_space(cert_tri).nonzero_elements():
        surface = canonical_surface(cert_tri, phi)
        assert chi_minus(surface) == -euler_characteristic(surface)


def test_fixture_certificate_chi_minus_sums_to_size():
    for sig in CENSUS_FIXTURES:
        tri = decode(sig)
        from idealtri import bound_certificate
        cert = bound_certificate(tri)
        total = sum(chi_minus(canonical_surface(tri, p))
                    for p in cert.colouring.phi)
        assert total == tri.n


def test_doubled_coordinates_build_orientation_covers():
    # Doubling the coordinates of a one-sided surface yields its
    # orientation double cover: connected, orientable, twice the Euler
    # characteristic.  Doubling a two-sided surface yields two parallel
    # copies.  This exercises the parallel-sheet layering directly.
    tri = build_bundle("RRLL").tri
    for phi in cocycle_space(tri).nonzero_elements():
        surface = canonical_surface(tri, phi)
        single = components(surface)
        assert len(single.components) == 1
        assert not single.components[0].orientable
        doubled = from_coordinates(
            tri, [2 * x for x in surface.coordinate_vector()])
        cover = components(doubled)
        assert len(cover.components) == 1
        assert cover.components[0].orientable
        assert cover.components[0].euler == 2 * single.components[0].euler

    link_tri = decode(CENSUS_FIXTURES[0])
    link = vertex_link_surface(link_tri)
    doubled = from_coordinates(
        link_tri, [2 * x for x in link.coordinate_vector()])
    comps = components(doubled)
    assert sorted((c.euler, c.orientable) for c in comps.components) == [
        (0, True), (0, True)]


def test_sum_with_vertex_link_splits_into_both():
    # canonical surfaces avoid the cusp, so adding the vertex-linking
    # coordinates gives the disjoint union of the two surfaces
    tri = build_bundle("RRLL").tri
    link = vertex_link_surface(tri)
    for phi in cocycle_space(tri).nonzero_elements():
        surface = canonical_surface(tri, phi)
        both = from_coordinates(tri, [
            x + y for x, y in zip(surface.coordinate_vector(),
                                  link.coordinate_vector())])
        expected = sorted(
            [(c.euler, c.orientable) for c in components(surface).components]
            + [(0, True)])
        got = sorted((c.euler, c.orientable)
                     for c in components(both).components)
        assert got == expected
        assert euler_characteristic(both) == euler_characteristic(surface)


def test_chi_minus_over_mixed_components():
    from idealtri.surfaces import SurfaceComponent, SurfaceComponents
    comps = SurfaceComponents(surface=None, components=(
        SurfaceComponent(euler=-2, orientable=True, discs=4),
        SurfaceComponent(euler=0, orientable=True, discs=2)))
    assert comps.chi_minus() == 2
    assert not comps.has_sphere()
    sphere = SurfaceComponents(surface=None, components=(
        SurfaceComponent(euler=2, orientable=True, discs=4),))
    assert sphere.has_sphere()
    assert sphere.chi_minus() == 0


def test_coordinate_vector_round_trip():
    tri = decode("cPcbbbiht")
    surface = vertex_link_surface(tri)
    vec = surface.coordinate_vector()
    assert len(vec) == 7 * tri.n
    again = from_coordinates(tri, vec)
    assert again.triangles == surface.triangles
    assert again.quads == surface.quads
