from fractions import Fraction

import pytest

from tropint.cycles import WeightedFan
from tropint.errors import InvalidInput
from tropint.fans import (
    Fan,
    cone_minus_cones,
    faces,
    is_complete,
    is_unimodular,
    lattice_normal,
    locate,
    star,
    subfan_on_support,
    validate_fan,
)
from tropint.intlinalg import in_rat_span, int_solve, transpose


def test_p2_fan_is_valid(p2_fan):
    assert validate_fan(p2_fan) == []


def test_nonprimitive_ray_flagged():
    fan = Fan(2, [(1, 0), (2, 0)], [(0,), (1,)])
    diags = validate_fan(fan)
    assert any("not primitive" in d for d in diags)


def test_overlapping_cones_flagged():
    # cone{(1,0),(0,1)} and cone{(1,1),(1,-1)} overlap beyond a shared face
    fan = Fan(2, [(1, 0), (0, 1), (1, 1), (1, -1)], [(0, 1), (2, 3)])
    diags = validate_fan(fan)
    assert any("overlap" in d for d in diags)


def test_faces_p2(p2_fan):
    by_dim = faces(p2_fan)
    assert len(by_dim[0]) == 1 and by_dim[0] == [()]
    assert len(by_dim[1]) == 3
    assert len(by_dim[2]) == 3


def test_faces_single_ray():
    fan = Fan(2, [(1, 0)], [(0,)])
    by_dim = faces(fan)
    assert by_dim[0] == [()] and by_dim[1] == [(0,)]
    assert 2 not in by_dim


def test_faces_hexagon(hexagon_fan):
    by_dim = faces(hexagon_fan)
    assert (len(by_dim[0]), len(by_dim[1]), len(by_dim[2])) == (1, 6, 6)


def test_unimodular(p2_fan, hexagon_fan):
    assert is_unimodular(p2_fan)
    assert is_unimodular(hexagon_fan)
    assert is_unimodular(Fan(2, [], [()]))  # zero fan
    assert not is_unimodular(Fan(2, [(1, 0), (1, 2)], [(0, 1)]))


def test_complete(p2_fan, hexagon_fan, tropical_line):
    assert is_complete(p2_fan)
    assert is_complete(hexagon_fan)
    assert not is_complete(tropical_line.fan)
    assert is_complete(Fan(0, [], [()]))
    assert not is_complete(Fan(2, [(1, 0), (0, 1)], [(0, 1)]))


def test_locate_hexagon(hexagon_fan):
    # (2,1) = (1,0) + (1,1)
    assert locate(hexagon_fan, (2, 1)) == (0, 1)
    assert locate(hexagon_fan, (0, 0)) == ()
    assert locate(hexagon_fan, (5, 0)) == (0,)


def test_locate_outside(tropical_line):
    assert locate(tropical_line.fan, (1, -1)) is None
    assert locate(tropical_line.fan, (0, 0)) == ()


def test_lattice_normal_unimodular_quadrant():
    fan = Fan(2, [(1, 0), (0, 1)], [(0, 1)])
    v = lattice_normal(fan, (0, 1), (0,))
    # class of (0,1) modulo Z(1,0), on the positive side
    assert v[1] == 1


def test_lattice_normal_ray_to_origin():
    fan = Fan(2, [(1, 1)], [(0,)])
    assert lattice_normal(fan, (0,), ()) == (1, 1)


def test_lattice_normal_generator_correction():
    # cone{(1,0),(1,2)}: the ray (1,2) is twice a generator mod Z(1,0)
    fan = Fan(2, [(1, 0), (1, 2)], [(0, 1)])
    v = lattice_normal(fan, (0, 1), (0,))
    # the class of v must generate Z^2/Z(1,0), i.e. v = (*, +-1), positive side
    assert v[1] == 1
    # and (1,2) must be 2v modulo the facet
    assert in_rat_span([(1, 0)], tuple(a - 2 * b for a, b in zip((1, 2), v)))


def test_lattice_normal_rejects_non_facet(p2_fan):
    with pytest.raises(InvalidInput):
        lattice_normal(p2_fan, (0, 1), (2,))


def test_lattice_normal_spans_index_one(hexagon_fan):
    # representative plus facet rays spans the cone lattice with index 1
    from tropint.intlinalg import lattice_index
    for sigma in hexagon_fan.maximal_cones:
        for drop in sigma:
            tau = tuple(i for i in sigma if i != drop)
            v = lattice_normal(hexagon_fan, sigma, tau)
            gens = [hexagon_fan.rays[i] for i in tau] + [v]
            assert lattice_index(gens, 2) == 1


def test_star_of_zero_cone_is_identity(p2_fan):
    sf, P = star(p2_fan, ())
    assert sf.rank == 2
    assert sorted(sf.rays) == sorted(p2_fan.rays)
    assert len(sf.maximal_cones) == 3
    assert P == [[1, 0], [0, 1]]


def test_star_p2_at_ray(p2_fan):
    sf, _ = star(p2_fan, (0,))
    assert sf.rank == 1
    assert sorted(sf.rays) == [(-1,), (1,)]
    assert is_complete(sf)


def test_star_hexagon_at_diagonal(hexagon_fan):
    sf, _ = star(hexagon_fan, (1,))
    assert sf.rank == 1 and is_complete(sf)


def test_star_completeness_inherited(hexagon_fan):
    for cone in hexagon_fan.cones():
        sf, _ = star(hexagon_fan, cone)
        assert is_complete(sf)


def test_subfan_on_support(hexagon_fan, tropical_line):
    sub = subfan_on_support(hexagon_fan, tropical_line)
    dims = faces(sub)
    assert dims[0] == [()]
    assert len(dims[1]) == 3
    assert 2 not in dims
    ray_values = {hexagon_fan.rays[c[0]] for c in dims[1]}
    assert ray_values == {(1, 0), (0, 1), (-1, -1)}


def test_subfan_full_support(hexagon_fan):
    ambient = WeightedFan(hexagon_fan, 2, {c: 1 for c in hexagon_fan.maximal_cones})
    sub = subfan_on_support(hexagon_fan, ambient)
    assert set(sub.maximal_cones) == set(hexagon_fan.maximal_cones)


def test_subfan_straddling_support_rejected(p2_fan):
    # rays (1,0),(0,1),(-1,0): the last is interior to a 2-cone of the fan
    fan = Fan(2, [(1, 0), (0, 1), (-1, 0)], [(0,), (1,), (2,)])
    line = WeightedFan(fan, 1, {(0,): 1, (1,): 1, (2,): 1})
    with pytest.raises(InvalidInput, match="not a union of cones"):
        subfan_on_support(p2_fan, line)


def test_cone_minus_cones_covered():
    # first quadrant covered by its two halves
    assert cone_minus_cones(
        [(1, 0), (0, 1)], [[(1, 0), (1, 1)], [(1, 1), (0, 1)]], 2) is None


def test_cone_minus_cones_leftover():
    w = cone_minus_cones([(1, 0), (0, 1)], [[(1, 0), (1, 1)]], 2)
    assert w is not None
    x, y = w
    assert x >= 0 and y >= 0          # inside the quadrant
    assert y > x                      # strictly outside cone{(1,0),(1,1)}


def test_locate_consistent_with_membership(hexagon_fan):
    pts = [(2, 1), (1, 2), (-3, 1), (-1, -5), (7, 7), (0, -2)]
    for p in pts:
        c = locate(hexagon_fan, p)
        assert c is not None
        # p is a nonnegative combination of the cone's rays
        cols = transpose([list(hexagon_fan.rays[i]) for i in c])
        from tropint.intlinalg import rat_solve
        sol = rat_solve(cols, p)
        assert sol is not None and all(x > 0 for x in sol)
