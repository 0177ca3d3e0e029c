"""Acceptance suite: one test per criterion, exact tolerances.

Each test prints a single PASS line on success (visible with -s or in
captured output); a failure raises with the offending values.
"""

import itertools
import random
import time

from idealtri import (
    Cocycle, MoveSite, anatomy_report, apply_move, bound_certificate,
    bounded_move_search, build_bundle, bundle_certificate, canonical_surface,
    check_identities, classify_rank2, cocycle_space, decode, encode_canonical,
    enumerate_complexes, enumerate_moves, euler_characteristic, lst_build,
    rank2_subgroups, relabelled, word_analysis,
)
from idealtri.perms import ALL_PERMS
from idealtri.search import has_interior_degree3_and_torus_boundary

from helpers import octahedron_model, random_admissible

CENSUS_FIXTURES = {
    "gLLMQbeefffehhqxhqq": 6,
    "iLLLQPcbefgffhhhxxhaqxxqh": 8,
    "iLLLQPcbefgffhhhhhqaxhhxq": 8,
    "iLLwQPcbeefgehhhhhqhhqhqx": 8,
}


def _ok(name):
    print(f"ACCEPTANCE {name}: PASS")


def test_criterion_1_census_fixtures():
    for sig, size in CENSUS_FIXTURES.items():
        start = time.monotonic()
        tri = decode(sig)
        assert tri.n == size
        assert len(tri.vertex_classes) == 1
        assert tri.vertex_classes[0].is_torus_link
        assert tri.is_orientable
        report = anatomy_report(tri)
        assert report["no_degree_one_edge"]
        assert report["no_degree_two_edge"]
        assert report["no_threefold_face"]
        assert report["no_dunce_face"]
        cert = bound_certificate(tri)
        assert cert is not None, sig
        rc = cert.colouring
        assert rc.counts["qqq"] == tri.n
        assert cert.sum_neg_chi == size
        assert tri.n % 2 == 0
        elapsed = time.monotonic() - start
        assert elapsed < 1.0, f"{sig}: {elapsed:.2f}s"
    _ok("1 census fixtures certify with sum(-chi) = |T| in under 1s each")


def _verify_identities(tri):
    count = 0
    for sg in rank2_subgroups(cocycle_space(tri)):
        rc = classify_rank2(tri, Cocycle(tri, sg[0]), Cocycle(tri, sg[1]))
        chis = [euler_characteristic(canonical_surface(tri, p)) for p in rc.phi]
        report = check_identities(rc, *chis)  # raises on any failure
        assert report["eq_types_vs_chi"]["holds"]
        assert report["eq_weighted_even_edges"]["holds"]
        assert report["eq_degree_three_even_edges"]["holds"]
        assert report["eq_degree_three_even_edges"]["applicable"]
        assert report["even_subcomplex_euler"]["holds"]
        count += 1
    return count


def test_criterion_2_counting_identities():
    for sig in CENSUS_FIXTURES:
        assert _verify_identities(decode(sig)) >= 1
    rng = random.Random(20260809)
    triangulated = 0
    subgroups = 0
    while triangulated < 500:
        tri = random_admissible(rng, min_tets=2, max_tets=6, rank2_only=True)
        assert 2 <= tri.n <= 6
        subgroups += _verify_identities(tri)
        triangulated += 1
    assert subgroups >= 500  # identities genuinely exercised, not vacuous
    _ok("2 counting identities exact on fixtures and "
        f"{triangulated} randomized triangulations ({subgroups} subgroups)")


def test_criterion_3_degree3_enumeration():
    found = enumerate_complexes(
        2, has_interior_degree3_and_torus_boundary, boundary_faces=2)
    assert len(found) == 1
    (sig,) = found
    lst = lst_build("b")
    assert lst.params.as_tuple() == (1, 3, 4)
    assert sig == encode_canonical(lst.tri)
    _ok("3 the unique 2-tetrahedron degree-3 complex is LST(1,3,4)")


def test_criterion_4_monodromy_suite():
    start = time.monotonic()
    words = ["".join(w) for k in range(2, 7)
             for w in itertools.product("RL", repeat=k)
             if "R" in w and "L" in w]
    assert sum(1 for w in words if len(w) == 6) == 62
    identity_words = 0
    for word in words:
        bundle = build_bundle(word)
        tri = bundle.tri
        assert tri.n == len(word)
        assert len(tri.vertex_classes) == 1
        assert tri.vertex_classes[0].is_torus_link
        assert tri.is_orientable
        assert all(e.degree % 2 == 0 for e in tri.edge_classes)
        for phi in cocycle_space(tri).nonzero_elements():
            surface = canonical_surface(tri, phi)
            horizontal = sum(surface.quads[t][bundle.horizontal_quad - 1]
                             for t in range(tri.n))
            assert euler_characteristic(surface) == -horizontal
        if word_analysis(word).mod2_order == 1:
            identity_words += 1
            bc = bundle_certificate(word)
            assert bc.found and bc.cover_degree == 1
            assert bc.sum_neg_chi == len(word)
    assert identity_words > 0
    bc = bundle_certificate("RL")
    assert bc.cover_degree == 3 and bc.covered_word == "RLRLRL"
    assert bc.found and bc.sum_neg_chi == 6
    elapsed = time.monotonic() - start
    assert elapsed < 10.0, f"{elapsed:.2f}s"
    _ok(f"4 monodromy suite over {len(words)} words (62 of length 6) "
        f"in {elapsed:.1f}s")


def test_criterion_5_isosig_laws():
    for sig in CENSUS_FIXTURES:
        assert encode_canonical(decode(sig)) == sig
    rng = random.Random(5924)
    trials = 0
    for i in range(10):
        tri = random_admissible(rng, min_tets=2, max_tets=6)
        base = encode_canonical(tri)
        for _ in range(100):
            tet_map = list(range(tri.n))
            rng.shuffle(tet_map)
            vmaps = [rng.choice(ALL_PERMS) for _ in range(tri.n)]
            assert encode_canonical(relabelled(tri, tet_map, vmaps)) == base
            trials += 1
    assert trials == 1000
    _ok("5 signature round-trips and 1000 relabelling invariance trials")


def test_criterion_6_move_laws():
    rng = random.Random(664)

    def link_data(t):
        return sorted((v.link_euler, v.link_orientable)
                      for v in t.vertex_classes)

    performed = 0
    while performed < 100:
        tri = random_admissible(rng, max_tets=7)
        sites = [s for s in enumerate_moves(tri) if s.kind == "2-3"]
        if not sites:
            continue
        site = rng.choice(sites)
        bigger = apply_move(tri, site)
        assert bigger.is_orientable == tri.is_orientable
        assert link_data(bigger) == link_data(tri)
        new_edge = bigger.edge_class_of(bigger.n - 3, 0, 1)
        back = apply_move(bigger, MoveSite("3-2", new_edge))
        assert link_data(back) == link_data(bigger)
        assert encode_canonical(back) == encode_canonical(tri)
        performed += 1

    # the local 4-4 model: {qq, tt, empty, tt} -> {qq, qq, tt, tt}
    from test_moves import _colour_mask, _local_types
    tri = octahedron_model()

    def equator(t, label):
        return t if label == 2 else (t + 1) % 4

    def colour(t, a, b):
        a, b = sorted((a, b))
        if (a, b) == (0, 1):
            return 0
        if a in (0, 1):
            return 1 if equator(t, b) in (0, 1) else 0
        return 1 if {equator(t, 2), equator(t, 3)} in ({1, 2}, {3, 0}) else 0

    phi2 = Cocycle(tri, _colour_mask(tri, colour))
    assert sorted(_local_types(tri, phi2)) == ["empty", "qq", "tt", "tt"]
    f = tri.edge_class_of(0, 0, 1)
    for site in [s for s in enumerate_moves(tri)
                 if s.kind == "4-4" and s.index == f]:
        image = apply_move(tri, site)
        points = [0, 3, 2, 1]
        a1, a2 = points[site.axis], points[site.axis + 2]
        o1, o2 = points[(site.axis + 1) % 4], points[(site.axis + 3) % 4]
        semantics = [("u", a1, o1, a2), ("u", a1, o2, a2),
                     ("v", a1, o1, a2), ("v", a1, o2, a2)]

        def new_colour(t, a, b):
            sa, sb = semantics[t][a], semantics[t][b]
            if isinstance(sa, str) and isinstance(sb, str):
                return 0
            if isinstance(sa, str) or isinstance(sb, str):
                x = sb if isinstance(sa, str) else sa
                return 1 if x in (0, 1) else 0
            if {sa, sb} in ({0, 1}, {2, 3}):
                return 0
            return 1

        phi2_new = Cocycle(image, _colour_mask(image, new_colour))
        assert sorted(_local_types(image, phi2_new)) == ["qq", "qq", "tt", "tt"]
    _ok("6 move laws: 100 2-3/3-2 round trips, links preserved, "
        "4-4 model trades the empty tetrahedron for quad pairs")


def test_criterion_7_minimality_probe():
    start = time.monotonic()
    tri = build_bundle("RL").tri
    result = bounded_move_search(tri, max_tets=3, max_depth=8)
    assert result.min_tetrahedra == 2
    assert result.smaller_admissible == ()
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"{elapsed:.2f}s"
    _ok(f"7 bounded move search (cap 3, depth 8) finds nothing below "
        f"2 tetrahedra in {elapsed:.1f}s")


def test_criterion_8_out_of_scope_statement():
    # Not verified at desk scale, by design: the census-wide count of 26
    # bound-attaining triangulations among 162182 minimal ones,
    # hyperbolicity certification, tautness of canonical surfaces, and
    # the geometric volume bound.  Criteria 1-7 are the combinatorial
    # acceptance surface standing in for them.
    _ok("8 out-of-scope items recorded: census-wide counts, "
        "hyperbolicity, tautness, volume bounds")
