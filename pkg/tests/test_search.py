"""Enumeration oracles and bounded move-graph search."""

import random

import pytest

from idealtri import (
    bounded_move_search, build_bundle, decode, encode_canonical,
    enumerate_complexes, lst_build,
)
from idealtri.search import (
    closed_admissible, has_interior_degree3_and_torus_boundary,
    random_move_walk, torus_links_only,
)


def test_degree3_context_is_unique_and_is_lst134():
    found = enumerate_complexes(
        2, has_interior_degree3_and_torus_boundary, boundary_faces=2)
    assert len(found) == 1
    (sig,) = found
    assert sig == encode_canonical(lst_build("b").tri)


def test_two_tet_admissible_census():
    found = enumerate_complexes(2, closed_admissible, boundary_faces=0)
    # the two census triangulations appear, plus one further complex the
    # combinatorial filter cannot separate from them
    assert "cPcbbbiht" in found
    assert encode_canonical(build_bundle("RL").tri) in found
    assert sorted(found) == ["cPcbbbdei", "cPcbbbdxm", "cPcbbbiht"]


def test_no_one_tet_admissible_complex():
    assert enumerate_complexes(1, closed_admissible, boundary_faces=0) == {}


def test_one_tet_witnesses():
    # the full 1-tetrahedron enumeration supplies the small witnesses:
    # non-orientable gluings and non-torus links both occur
    everything = enumerate_complexes(1, None, boundary_faces=0)
    assert everything
    non_orientable = [t for t in everything.values() if not t.is_orientable]
    assert non_orientable
    bad_links = [t for t in everything.values()
                 if any(not v.is_torus_link for v in t.vertex_classes)]
    assert bad_links
    for tri in bad_links[:3]:
        assert any(v.link_euler != 0 or not v.link_orientable
                   for v in tri.vertex_classes)


def test_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_complexes(3, None)


def test_enumeration_order_independent():
    # rerunning gives the same canonical-signature set
    a = enumerate_complexes(1, closed_admissible, boundary_faces=0)
    b = enumerate_complexes(1, closed_admissible, boundary_faces=0)
    assert sorted(a) == sorted(b)


def test_bounded_search_fig8():
    tri = build_bundle("RL").tri
    result = bounded_move_search(tri, max_tets=3, max_depth=6)
    assert result.min_tetrahedra == 2
    assert result.smaller_admissible == ()
    assert not result.truncated
    assert encode_canonical(tri) in result.reachable


def test_bounded_search_finds_simplification():
    # a 2-3 move away from the two-tetrahedron bundle, one 3-2 returns
    tri = build_bundle("RL").tri
    from idealtri import apply_move, enumerate_moves
    site = next(s for s in enumerate_moves(tri) if s.kind == "2-3")
    bigger = apply_move(tri, site)
    result = bounded_move_search(bigger, max_tets=3, max_depth=1)
    assert result.min_tetrahedra == 2
    assert result.smaller_admissible


def test_bounded_search_truncation_flag():
    tri = decode("gLLMQbeefffehhqxhqq")
    result = bounded_move_search(tri, max_tets=7, max_depth=1)
    assert result.truncated  # depth cap with a live frontier is reported


def test_random_move_walk_respects_filter():
    rng = random.Random(7)
    tri = build_bundle("RRLL").tri
    walked = random_move_walk(tri, 5, rng, max_tets=6, keep=torus_links_only)
    assert torus_links_only(walked)
    assert walked.n <= 6
