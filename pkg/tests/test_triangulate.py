import pytest

from cobarlab.chains import (check_chain_map, check_coalgebra_map,
                             check_quasi_iso)
from cobarlab.cobar import CobarSet
from cobarlab.cubes import CubeMorphism, ProductCubicalSet, StandardCube
from cobarlab.perms import all_perms
from cobarlab.simpcube import u_pi
from cobarlab.simplicial import sphere
from cobarlab.triangulate import (TriangulatedCubicalSet, TriSimplex,
                                  full_support_simplices, triangulation_map,
                                  product_split_backward,
                                  product_split_forward)


def test_full_support_counts():
    # m-simplices touching every wall: surjections {1..n} -> {1..m}
    assert len(list(full_support_simplices(2, 1))) == 1
    assert len(list(full_support_simplices(2, 2))) == 2
    assert len(list(full_support_simplices(3, 2))) == 6
    assert list(full_support_simplices(0, 0))


def test_triangulated_cube_is_simplicial():
    for n in range(3):
        tri = TriangulatedCubicalSet(StandardCube(n), n)
        assert tri.validate(n).ok


def test_canon_is_reduction_order_independent():
    cube = StandardCube(2)
    tri = TriangulatedCubicalSet(cube, 2)
    y = cube.degen(cube.conn(CubeMorphism.identity(2), 1), 1)
    u = u_pi((1, 2, 3, 4))
    expected = tri.canon(y, u)
    # applying any applicable reduction first reaches the same normal form
    options = tri.reduction_options(y, u)
    for y2, u2 in options:
        assert tri.canon(y2, u2) == expected


@pytest.mark.parametrize("n", range(4))
def test_triangulation_map_on_cubes(n):
    _, _, _, tmap = triangulation_map(StandardCube(n), n + 1)
    assert check_chain_map(tmap).ok
    assert check_coalgebra_map(tmap).ok
    assert check_quasi_iso(tmap, range(n + 1)).ok


def test_triangulation_map_on_product():
    prod = ProductCubicalSet(StandardCube(1), StandardCube(1))
    _, _, _, tmap = triangulation_map(prod, 3)
    assert check_chain_map(tmap).ok
    assert check_quasi_iso(tmap, range(3)).ok


def test_triangulation_map_on_cobar_sphere():
    cset = CobarSet(sphere(2))
    _, cy, ct, tmap = triangulation_map(cset, 3)
    assert check_chain_map(tmap).ok
    assert check_quasi_iso(tmap, range(3)).ok
    # loop-space chains of the sphere: one generator per degree
    for n in range(3):
        assert ct.homology(n).betti == 1
        assert not ct.homology(n).torsion


def test_sign_flip_breaks_chain_map():
    cube = StandardCube(2)
    tri, cy, ct, tmap = triangulation_map(cube, 3)
    top = CubeMorphism.identity(2)
    tmap.mapping[top] = {k: -c for k, c in tmap.mapping[top].items()}
    verdict = check_chain_map(tmap)
    assert not verdict.ok
    assert verdict.witness is not None


def test_product_splitting_bijection():
    left = StandardCube(1)
    right = StandardCube(1)
    prod = ProductCubicalSet(left, right)
    tri_prod = TriangulatedCubicalSet(prod, 2)
    tri_left = TriangulatedCubicalSet(left, 1)
    tri_right = TriangulatedCubicalSet(right, 1)
    seen = set()
    for m in range(3):
        for x in tri_prod.nondegenerate(m):
            a, b = product_split_backward(tri_left, tri_right, prod, x)
            assert product_split_forward(tri_prod, prod, a, b) == x
            seen.add((a, b))
    assert len(seen) == sum(len(tri_prod.nondegenerate(m)) for m in range(3))
