import random
from fractions import Fraction

import pytest

from tropint.intlinalg import (
    det,
    hnf,
    identity,
    in_rat_span,
    int_inverse,
    int_kernel,
    int_solve,
    invariant_factors,
    lattice_index,
    mat_mul,
    mat_vec,
    primitive,
    rat_nullspace,
    rat_rank,
    rat_solve,
    saturation,
    snf,
    transpose,
)


def is_diagonal(S):
    return all(S[i][j] == 0 for i in range(len(S)) for j in range(len(S[0])) if i != j)


def check_snf(A):
    S, U, V = snf(A)
    assert mat_mul(mat_mul(U, A), V) == S
    assert det(U) in (1, -1)
    assert det(V) in (1, -1)
    assert is_diagonal(S)
    d = [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    return S, U, V


def test_snf_zero_matrix():
    S, U, V = snf([[0]])
    assert S == [[0]]
    assert U == [[1]] and V == [[1]]


def test_snf_identity():
    S, U, V = check_snf(identity(3))
    assert S == identity(3)


def test_snf_worked_example():
    # gcd of entries is 2 and |det| = 8, so the invariant factors are 2, 4
    S, U, V = check_snf([[2, 4], [6, 8]])
    assert [S[0][0], S[1][1]] == [2, 4]


@pytest.mark.parametrize("seed", range(8))
def test_snf_random(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 5), rng.randint(1, 5)
    A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
    check_snf(A)


def test_hnf_properties():
    A = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    H, U = hnf(A)
    assert mat_mul(U, A) == H
    assert det(U) in (1, -1)
    # canonical shape: positive pivots, reduced entries above
    pivots = []
    for row in H:
        pc = next((j for j, x in enumerate(row) if x != 0), None)
        if pc is not None:
            pivots.append(pc)
            assert row[pc] > 0
    assert pivots == sorted(pivots)


def test_hnf_is_canonical():
    # same row span, same HNF
    A = [[1, 2, 3], [4, 5, 6]]
    B = [[5, 7, 9], [4, 5, 6]]
    assert hnf(A)[0] == hnf(B)[0]


def test_int_kernel_identity_is_empty():
    assert int_kernel(identity(3)) == []


def test_int_kernel_rank_and_saturation():
    A = [[1, 1, 1]]
    ker = int_kernel(A)
    assert len(ker) == 2
    for v in ker:
        assert mat_vec(A, v) == (0,)
    # expected lattice: {(1,-1,0),(1,0,-1)} up to unimodular change
    for target in [(1, -1, 0), (1, 0, -1)]:
        assert int_solve(transpose([list(v) for v in ker]), target) is not None
    # saturation: invariant factors of the stacked basis are 1
    assert invariant_factors([list(v) for v in ker]) == [1, 1]


def test_int_kernel_saturated_generator():
    assert int_kernel([[2, -2]]) == [(1, 1)]


def test_int_solve_identity():
    assert int_solve(identity(3), (4, -5, 6)) == (4, -5, 6)


def test_int_solve_parity_obstruction():
    assert int_solve([[2]], (3,)) is None
    # the obstruction is visible in the SNF of the augmented matrix
    facs = invariant_factors([[2, 3]])
    assert facs == [1]  # augmenting removes it: rational solution exists
    assert invariant_factors([[2]]) == [2]


def test_int_solve_worked_example():
    A = [[1, 2], [0, 3]]
    x = int_solve(A, (1, 3))
    assert x is not None
    assert mat_vec(A, x) == (1, 3)
    assert x == (-1, 1)  # unique: A is invertible


@pytest.mark.parametrize("seed", range(6))
def test_int_solve_random_consistency(seed):
    rng = random.Random(100 + seed)
    m, n = rng.randint(1, 4), rng.randint(1, 4)
    A = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
    x0 = tuple(rng.randint(-4, 4) for _ in range(n))
    b = mat_vec(A, x0)
    x = int_solve(A, b)
    assert x is not None
    assert mat_vec(A, x) == b


def test_int_solve_rational_but_not_integral():
    # 2x = 1 has a rational solution only
    assert rat_solve([[2]], (1,)) == (Fraction(1, 2),)
    assert int_solve([[2]], (1,)) is None


def test_lattice_index():
    assert lattice_index([(1, 0), (0, 1)], 2) == 1
    assert lattice_index([(2, 0), (0, 3)], 2) == 6
    assert lattice_index([(1, 1)], 2) is None
    assert lattice_index([], 0) == 1


def test_lattice_index_matches_invariant_factors():
    gens = [(2, 2), (0, 4)]
    facs = invariant_factors([list(g) for g in gens])
    prod = 1
    for f in facs:
        prod *= f
    assert lattice_index(gens, 2) == prod == 8


def test_primitive():
    assert primitive((2, -4, 6)) == (1, -2, 3)
    assert primitive((0, 0)) == (0, 0)
    assert primitive((0, -3)) == (0, -1)


def test_rat_rank_and_nullspace():
    A = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rat_rank(A) == 2
    for v in rat_nullspace(A):
        assert all(sum(Fraction(A[i][j]) * v[j] for j in range(3)) == 0 for i in range(3))


def test_in_rat_span():
    assert in_rat_span([(1, 1, 0), (0, 0, 1)], (2, 2, 5))
    assert not in_rat_span([(1, 1, 0)], (1, 0, 0))
    assert in_rat_span([], (0, 0))
    assert not in_rat_span([], (1, 0))


def test_saturation():
    assert saturation([(2, 0)], 2) == [(1, 0)]
    assert saturation([(1, 1), (1, -1)], 2) == [(1, 0), (0, 1)]
    assert saturation([], 3) == []


def test_int_inverse():
    A = [[1, 2], [1, 3]]
    assert mat_mul(A, int_inverse(A)) == identity(2)
    with pytest.raises(ValueError):
        int_inverse([[2, 0], [0, 1]])
