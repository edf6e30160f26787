import random
from fractions import Fraction

import pytest

from tropint.feasibility import feasible_point, is_feasible, project


def satisfies(point, constraints):
    for coeffs, rel, rhs in constraints:
        val = sum(Fraction(c) * point[i] for i, c in enumerate(coeffs))
        rhs = Fraction(rhs)
        if rel == "==" and val != rhs:
            return False
        if rel == ">=" and not val >= rhs:
            return False
        if rel == ">" and not val > rhs:
            return False
    return True


def test_simplex_witness():
    cons = [((1, 0), ">=", 0), ((0, 1), ">=", 0), ((1, 1), "==", 1)]
    p = feasible_point(cons, 2)
    assert p is not None
    assert satisfies(p, cons)


def test_contradictory_bounds():
    assert feasible_point([((1,), ">=", 1), ((-1,), ">=", 0)], 1) is None


def test_strict_inequalities():
    cons = [((1,), ">", 0), ((-1,), ">", -1)]
    p = feasible_point(cons, 1)
    assert p is not None and 0 < p[0] < 1


def test_strict_infeasible_on_boundary():
    # x > 0 and x <= 0
    assert feasible_point([((1,), ">", 0), ((-1,), ">=", 0)], 1) is None


def test_displaced_cone_miss():
    # relint(cone{(1,0)}) meeting cone{(-1,-1)} + (1,2): forced t = 2, x = -1 < 0
    cons = [
        ((1, 0, 0), ">", 0),      # x > 0
        ((0, 1, 0), "==", 0),     # y = 0
        ((1, 0, 1), "==", 1),     # x = 1 - t
        ((0, 0, 1), "==", 2),     # 0 = 2 - t
        ((0, 0, 1), ">=", 0),     # t >= 0
    ]
    assert feasible_point(cons, 3) is None


def test_equalities_only():
    cons = [((1, 1), "==", 3), ((1, -1), "==", 1)]
    p = feasible_point(cons, 2)
    assert p == (2, 1)


def test_zero_variables():
    assert feasible_point([((), ">=", 0)], 0) == ()
    assert feasible_point([((), ">", 0)], 0) is None


@pytest.mark.parametrize("seed", range(10))
def test_random_systems_witness_exactness(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    cons = []
    for _ in range(rng.randint(1, 6)):
        coeffs = tuple(rng.randint(-3, 3) for _ in range(n))
        rel = rng.choice(["==", ">=", ">", ">="])
        cons.append((coeffs, rel, rng.randint(-2, 2)))
    p = feasible_point(cons, n)
    if p is not None:
        assert satisfies(p, cons)
    # decision-only agrees with witness search
    assert (p is not None) == is_feasible(cons, n)


def test_project_halfplane():
    # x >= 0, x + y = 2  projected to y gives y <= 2
    cons = [((1, 0), ">=", 0), ((1, 1), "==", 2)]
    projected = project(cons, 2, [1])
    assert satisfies((Fraction(2),), projected)
    assert not satisfies((Fraction(3),), projected)
    assert satisfies((Fraction(-7),), projected)


def test_project_retains_feasibility():
    cons = [((1, 1, 0), ">=", 1), ((0, 1, 1), ">=", 1), ((-1, -1, -1), ">=", -2)]
    projected = project(cons, 3, [0, 2])
    # (0, 0) extends (e.g. y = 2) and satisfies the projection
    assert satisfies((Fraction(0), Fraction(0)), projected)
