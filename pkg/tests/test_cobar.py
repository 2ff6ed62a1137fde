import pytest

from cobarlab.cobar import (CobarSet, compare_models, cube_to_word,
                            omega_complex, word_to_cube)
from cobarlab.cubes import cubical_chains
from cobarlab.simplicial import (delta4_mod_skeleton, fixture, nondeg, sphere,
                                 standard_simplex)


def test_requires_one_reduced():
    with pytest.raises(ValueError):
        CobarSet(standard_simplex(2))


def test_unit_and_letter_dimensions():
    cset = CobarSet(sphere(2))
    sigma = nondeg("sigma", 2)
    assert cset.dim(cset.unit()) == 0
    assert cset.dim(word_to_cube((sigma,))) == 1
    assert cset.dim(word_to_cube((sigma, sigma))) == 2


def test_normalized_counts_for_sphere():
    # words in a single degree-1 letter: one basis element per degree
    cset = CobarSet(sphere(2))
    for n in range(5):
        assert len(cset.normalized(n)) == 1


def test_cubical_identities_on_cobar():
    assert CobarSet(sphere(2)).validate(3).ok
    assert CobarSet(delta4_mod_skeleton()).validate(2).ok


def test_degenerate_letters_are_operator_images():
    cset = CobarSet(sphere(2))
    sigma = nondeg("sigma", 2)
    s2 = cset.sset
    # a degenerate simplex letter re-canonicalizes into an operator cube
    cube = cset.canonicalize([s2.degeneracy(sigma, 1)])
    base, ops = cube
    assert base == (sigma,) and len(ops) == 1
    # bottom-degenerate letters over the base point disappear
    assert cset.canonicalize([s2.degeneracy(s2.face(sigma, 0), 0)]) \
        == cset.degen(cset.unit(), 1)


def test_multiplication_shifts_operators():
    cset = CobarSet(sphere(3))
    tau = nondeg("sigma", 3)
    c1 = cset.degen(word_to_cube((tau,)), 1)
    c2 = word_to_cube((tau,))
    prod = cset.mul(c1, c2)
    assert prod[0] == (tau, tau)
    assert cset.dim(prod) == 5
    assert cset.mul(cset.unit(), c2) == c2
    assert cset.mul(c2, cset.unit()) == c2


def test_word_cube_roundtrip():
    cset = CobarSet(sphere(2))
    sigma = nondeg("sigma", 2)
    w = (sigma, sigma)
    assert cube_to_word(word_to_cube(w)) == w
    assert cube_to_word(cset.degen(word_to_cube(w), 1)) is None


@pytest.mark.parametrize("name,max_deg", [("S2", 3), ("S3", 3), ("D4sk1", 3)])
def test_model_comparison(name, max_deg):
    omega, cset, cchain, verdicts = compare_models(fixture(name), max_deg)
    for key in ("basis", "differential", "product"):
        assert verdicts[key].ok, verdicts[key].witness


def test_omega_complex_d_squared():
    for name in ("S2", "S3", "D4sk1"):
        omega = omega_complex(fixture(name), 3)
        assert omega.check_d_squared().ok


def test_loop_space_homology_of_spheres():
    # James splitting: the loop space of the (d+1)-sphere has one integral
    # homology generator in every degree divisible by d
    cx = cubical_chains(CobarSet(sphere(2)), 4)
    for n in range(4):
        assert cx.homology(n).betti == 1 and not cx.homology(n).torsion
    cx3 = cubical_chains(CobarSet(sphere(3)), 4)
    for n in range(4):
        expect = 1 if n % 2 == 0 else 0
        assert cx3.homology(n).betti == expect


def test_loop_space_homology_of_wedge():
    # six 2-cells wedge: loop homology is the tensor algebra on six
    # degree-one generators
    cx = cubical_chains(CobarSet(delta4_mod_skeleton()), 2)
    assert cx.homology(0).betti == 1
    assert cx.homology(1).betti == 6
    assert cx.check_coalgebra().ok
