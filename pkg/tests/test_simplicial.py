import pytest

from cobarlab.chains import check_chain_map
from cobarlab.simplicial import (ProductSimplicialSet, Simplex,
                                 degenerate_point, delta4_mod_skeleton,
                                 fixture, nondeg, shuffle_chain_map, sphere,
                                 simplicial_chains, standard_simplex,
                                 two_loops_cell)

FIXTURES = ("Delta2", "I", "S2", "S3", "D4sk1", "TwoLoopsCell")


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_identities(name):
    assert fixture(name).validate_presentation(5).ok


def test_simplex_normal_form():
    s2 = sphere(2)
    x = nondeg("sigma", 2)
    # s_0 s_0 = s_1 s_0 in normal form
    a = s2.degeneracy(s2.degeneracy(x, 0), 0)
    b = s2.degeneracy(s2.degeneracy(x, 0), 1)
    assert a == b
    assert a.degens == (1, 0)


def test_face_counts_of_standard_simplex():
    d3 = standard_simplex(3)
    assert len(d3.nondegenerate(0)) == 4
    assert len(d3.nondegenerate(1)) == 6
    assert len(d3.nondegenerate(2)) == 4
    assert len(d3.nondegenerate(3)) == 1
    # with degeneracies: 4 triangles, two lifts of each edge, one per vertex
    assert len(list(d3.simplices(2))) == 4 + 2 * 6 + 4


def test_front_back_faces():
    d3 = standard_simplex(3)
    top = nondeg("0.1.2.3", 3)
    assert d3.front_face(top, 1) == nondeg("0.1", 1)
    assert d3.back_face(top, 2) == nondeg("2.3", 1)


def test_sphere_homology():
    for n in (2, 3):
        cx = simplicial_chains(sphere(n), n + 1)
        assert cx.check_d_squared().ok
        assert cx.check_coalgebra().ok
        for k in range(n + 1):
            expect = 1 if k in (0, n) else 0
            assert cx.homology(k).betti == expect
            assert not cx.homology(k).torsion


def test_collapsed_skeleton_homology():
    # collapsing the 1-skeleton of the 4-simplex leaves a wedge-like space
    # with six 2-cells; its degree-2 homology is free of rank 6
    cx = simplicial_chains(delta4_mod_skeleton(), 3)
    assert cx.homology(0).betti == 1
    assert cx.homology(1).betti == 0
    assert cx.homology(2).betti == 6


def test_two_loops_cell_homology():
    cx = simplicial_chains(two_loops_cell(), 3)
    assert cx.homology(0).betti == 1
    # d(T) = a - b + b = a, killing one loop
    assert cx.homology(1).betti == 1


def test_degenerate_point_helper():
    pt = degenerate_point("*", 3)
    assert pt.dim == 3 and pt.is_degenerate
    assert pt.degens == (2, 1, 0)


def test_product_and_shuffle_map():
    interval = standard_simplex(1, name="I")
    f = shuffle_chain_map(interval, interval, 2)
    assert check_chain_map(f).ok
    prod = ProductSimplicialSet(interval, interval)
    # the square has 4 vertices, 5 edges (4 sides + diagonal), 2 triangles
    assert len(prod.nondegenerate(0)) == 4
    assert len(prod.nondegenerate(1)) == 5
    assert len(prod.nondegenerate(2)) == 2


def test_validate_detects_corruption():
    bad = two_loops_cell()
    bad.faces[("T", 0)] = bad.faces[("a", 0)]  # wrong dimension
    assert not bad.validate_presentation(3).ok


def test_fixture_unknown_name():
    with pytest.raises(ValueError):
        fixture("nope")
