import random

from cobarlab.snf import (det_unimodular, identity_matrix, mat_mul,
                          matrix_rank, smith_normal_form)


def check_snf(a):
    res = smith_normal_form(a)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    uav = mat_mul(mat_mul(res.U, a), res.V)
    for i in range(rows):
        for j in range(cols):
            expect = res.diag[i] if i == j and i < len(res.diag) else 0
            assert uav[i][j] == expect
    if rows:
        assert det_unimodular(res.U) in (1, -1)
    if cols:
        assert det_unimodular(res.V) in (1, -1)
    diag = [d for d in res.diag if d]
    assert res.rank == len(diag)
    for x, y in zip(diag, diag[1:]):
        assert x > 0 and y % x == 0


def test_known_matrix():
    res = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert res.diag == (2, 2, 156)


def test_zero_and_identity():
    check_snf([[0, 0], [0, 0]])
    check_snf(identity_matrix(3))
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    assert smith_normal_form(identity_matrix(3)).diag == (1, 1, 1)


def test_random_matrices():
    rng = random.Random(20260823)
    for _ in range(50):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        a = [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)]
        check_snf(a)


def test_rank():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[1, 0], [0, 3]]) == 2
    assert matrix_rank([[0]]) == 0
