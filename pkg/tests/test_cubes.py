import itertools

import pytest

from cobarlab.cubes import (CubeMorphism, ProductCubicalSet, StandardCube,
                            all_cube_morphisms, cubical_chains)


def vertices(n):
    return list(itertools.product((0, 1), repeat=n))


def test_generator_evaluation():
    d = CubeMorphism.delta(2, 1, 1)  # insert constant 1 as coordinate 1
    assert d.evaluate((0,)) == (1, 0)
    s = CubeMorphism.sigma(2, 2)  # drop coordinate 2
    assert s.evaluate((0, 1)) == (0,)
    g = CubeMorphism.gamma(2, 1)  # min of coordinates 1 and 2
    assert g.evaluate((1, 0)) == (0,)
    assert g.evaluate((1, 1)) == (1,)


def test_composition_matches_evaluation():
    for lam in all_cube_morphisms(1, 2):
        for mu in all_cube_morphisms(2, 2):
            comp = mu.compose(lam)
            for v in vertices(1):
                assert comp.evaluate(v) == mu.evaluate(lam.evaluate(v))


def test_word_roundtrip():
    for source in range(3):
        for target in range(3):
            for lam in all_cube_morphisms(source, target):
                assert CubeMorphism.from_word(lam.to_word(), source) == lam


def test_morphism_counts():
    # endomorphisms of the 1-cube: identity, two constants, none else
    assert len(list(all_cube_morphisms(1, 1))) == 3
    assert len(list(all_cube_morphisms(0, 2))) == 4  # the four vertices


@pytest.mark.parametrize("n", range(4))
def test_standard_cube_identities(n):
    assert StandardCube(n).validate(n + 1).ok


def test_product_identities():
    prod = ProductCubicalSet(StandardCube(1), StandardCube(1))
    assert prod.validate(3).ok
    assert ProductCubicalSet(StandardCube(2), StandardCube(1)).validate(3).ok


def test_degenerate_and_folded():
    cube = StandardCube(2)
    top = CubeMorphism.identity(2)
    assert not cube.is_degenerate(top)
    assert not cube.is_folded(top)
    assert cube.is_degenerate(cube.degen(top, 1))
    assert cube.is_folded(cube.conn(top, 1))


def test_normalized_counts():
    cube = StandardCube(2)
    assert len(cube.normalized(2)) == 1
    assert len(cube.normalized(1)) == 4  # the four edges
    assert len(cube.normalized(0)) == 4


def test_cubical_chains_square():
    cx = cubical_chains(StandardCube(2), 2)
    assert cx.check_d_squared().ok
    assert cx.check_coalgebra().ok
    assert cx.homology(0).betti == 1
    assert cx.homology(1).betti == 0
    assert cx.homology(2).betti == 0


def test_cubical_chains_product():
    prod = ProductCubicalSet(StandardCube(1), StandardCube(1))
    cx = cubical_chains(prod, 2)
    assert cx.check_d_squared().ok
    assert cx.check_coalgebra().ok
    assert cx.homology(0).betti == 1 and cx.homology(1).betti == 0
