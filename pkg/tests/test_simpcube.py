import math
from fractions import Fraction

import pytest

from cobarlab.cubes import CubeMorphism
from cobarlab.perms import all_perms
from cobarlab.simpcube import (PartitionSimplex, SimplicialCube,
                               combine_simplices, common_bars,
                               decompose_product_simplex, extend_family,
                               face_by_bar_removal, from_parts,
                               hereditary_path, lambda_star, partition_face,
                               partition_degeneracy, project_simplex, realize,
                               u_pi, unrealize)
from cobarlab.simplicial import sphere
from cobarlab.verify import (check_degeneracy_lemma, check_face_lemma,
                             check_hereditary)


def test_u_pi_shape():
    u = u_pi((2, 1, 3))
    assert u.parts == (frozenset(), frozenset({2}), frozenset({1}),
                       frozenset({3}), frozenset())
    assert u.dim == 3 and not u.is_degenerate


def test_top_simplices_triangulate():
    # the n! top simplices are exactly the nondegenerate n-simplices of
    # the simplicial n-cube with full support
    for n in range(1, 5):
        cube = SimplicialCube(n)
        tops = {u for u in cube.nondegenerate(n)
                if not u.parts[0] and not u.parts[-1]}
        assert tops == {u_pi(pi) for pi in all_perms(n)}
        assert len(tops) == math.factorial(n)


def test_simplicial_identities():
    for n in range(4):
        assert SimplicialCube(n).validate(n + 1).ok


def test_face_by_bar_removal_matches_iterated_faces():
    pi = (2, 3, 1)
    u = u_pi(pi)
    assert face_by_bar_removal(pi, []) == u
    assert face_by_bar_removal(pi, [0]) == partition_face(u, 0)
    assert face_by_bar_removal(pi, [3]) == partition_face(u, 3)
    assert face_by_bar_removal(pi, [1, 2]) == \
        partition_face(partition_face(u, 2), 1)
    with pytest.raises(ValueError):
        face_by_bar_removal(pi, [0, 1, 2, 3])


def test_pushforward_lemmas():
    assert check_face_lemma(4).ok
    assert check_degeneracy_lemma(4).ok


def test_hereditary_property():
    assert check_hereditary(4).ok
    path = hereditary_path((3, 1, 2), (1, 2, 3))
    assert path[0] == (3, 1, 2) and path[-1] == (1, 2, 3)
    assert common_bars((2, 1, 3), (1, 2, 3)) == [0, 2, 3]


def test_matrix_and_vertex_forms():
    u = u_pi((2, 1))
    assert from_parts(u.n, u.parts) == u
    from cobarlab.simpcube import from_matrix
    assert from_matrix(u.to_matrix()) == u
    assert u.vertex(0) == (0, 0)
    assert u.vertex(2) == (1, 1)


def test_combine_project_roundtrip():
    a = u_pi((1, 2))
    b = u_pi((2, 1))
    c = combine_simplices(a, b)
    assert project_simplex(c, 1, 2) == a
    assert project_simplex(c, 3, 4) == b


def test_decompose_product_simplex():
    for pi in all_perms(3):
        for k in range(4):
            sh, a, b = decompose_product_simplex(pi, k)
            assert combine_simplices(a, b) == u_pi(pi)
            assert sh.k == k


def test_realize_unrealize():
    u = u_pi((2, 1, 3))
    weights = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), Fraction(0))
    point = realize(u, weights)
    assert unrealize(point) is not None


def test_extend_family_on_top_simplices():
    # the permutation-indexed family of top simplices of the cube itself
    # glues to the identity evaluator
    n = 2
    cube = SimplicialCube(n)
    family = {pi: u_pi(pi) for pi in all_perms(n)}
    evaluate, verdict = extend_family(n, family, cube)
    assert verdict.ok
    for pi in all_perms(n):
        assert evaluate(u_pi(pi)) == u_pi(pi)
        u = partition_face(u_pi(pi), 1)
        assert evaluate(u) == u
        w = partition_degeneracy(u_pi(pi), 0)
        assert evaluate(w) == w


def test_extend_family_rejects_incompatible_member():
    n = 2
    cube = SimplicialCube(n)
    family = {pi: u_pi(pi) for pi in all_perms(n)}
    family[(2, 1)] = partition_degeneracy(partition_face(u_pi((2, 1)), 2), 1)
    _, verdict = extend_family(n, family, cube)
    assert not verdict.ok
    assert verdict.witness is not None


def test_lambda_star_on_generators():
    u = u_pi((2, 1))
    # dropping coordinate 1 projects to the interval
    v = lambda_star(CubeMorphism.sigma(2, 1), u)
    assert v.n == 1 and v.dim == 2
