"""Weighted balanced fans: representatives of tropical cycles.

A :class:`WeightedFan` is a fan together with nonzero integer weights on
some of its cones of one fixed dimension.  Balancing is checked exactly
through lattice normal vectors; equivalence of cycles is decided by
relative-interior probing against both supports, without constructing a
common refinement.  Piecewise-linear divisors supply the independent
cross-check oracle for the displacement-rule intersection products.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput, InvariantViolation
from .fans import (
    Fan,
    cone_minus_cones,
    faces,
    lattice_normal,
    locate,
    star,
)
from .feasibility import feasible_point
from .intlinalg import in_rat_span, mat_vec, primitive


@dataclass(frozen=True)
class WeightedFan:
    """Pure-dimensional weighted fan; weights are nonzero on dim-``dim`` cones."""

    fan: Fan
    dim: int
    weights: tuple  # sorted tuple of (cone, weight) pairs

    def __init__(self, fan, dim, weights):
        object.__setattr__(self, "fan", fan)
        object.__setattr__(self, "dim", int(dim))
        if isinstance(weights, dict):
            weights = weights.items()
        wmap = {}
        for cone, w in weights:
            cone = tuple(sorted(int(i) for i in cone))
            w = int(w)
            if w == 0:
                continue
            if cone in wmap:
                raise InvalidInput(f"cone {cone} is weighted twice")
            wmap[cone] = w
        object.__setattr__(self, "weights", tuple(sorted(wmap.items())))
        by_dim = faces(fan)
        valid = set(by_dim.get(self.dim, []))
        for cone, _ in self.weights:
            if cone not in valid:
                raise InvalidInput(
                    f"weighted cone {cone} is not a dimension-{self.dim} cone of the fan")

    def items(self):
        return list(self.weights)

    def weight(self, cone):
        cone = tuple(sorted(cone))
        for c, w in self.weights:
            if c == cone:
                return w
        return 0

    def support_cones(self):
        return [c for c, _ in self.weights]

    def is_empty(self):
        return not self.weights

    def __hash__(self):
        return hash((self.fan, self.dim, self.weights))


def empty_cycle(rank, dim=0):
    return WeightedFan(Fan(rank, [], [()]), dim, {})


def _wall_list(wf):
    """All (dim-1)-faces of the weighted cones, with their weighted cofaces."""
    walls = {}
    for cone, w in wf.weights:
        for drop in cone:
            tau = tuple(i for i in cone if i != drop)
            walls.setdefault(tau, []).append((cone, w))
    return walls


def balance_check(wf):
    """Exact balancing test.

    Returns ``(balanced, violations)`` where each violation is a pair
    ``(tau, defect)`` naming a codimension-one face of the support and the
    weighted normal sum that fails to lie in the span of ``tau``.
    """
    violations = []
    for tau, cofaces in _wall_list(wf).items():
        n = wf.fan.rank
        total = [0] * n
        for cone, w in cofaces:
            v = lattice_normal(wf.fan, cone, tau)
            for j in range(n):
                total[j] += w * v[j]
        span = wf.fan.generators(tau)
        if not in_rat_span(span, tuple(total)):
            violations.append((tau, tuple(total)))
    return (not violations, violations)


def star_cycle(wf, sigma):
    """Star of a cycle at a cone, with the induced weights."""
    sigma = tuple(sorted(sigma))
    sset = set(sigma)
    touching = [(c, w) for c, w in wf.weights if sset <= set(c)]
    if not touching:
        raise InvalidInput(f"{sigma} is not contained in any weighted cone")
    sf, P = star(wf.fan, sigma)
    ray_index = {r: i for i, r in enumerate(sf.rays)}
    new_weights = {}
    for cone, w in touching:
        img = tuple(sorted(
            ray_index[primitive(_project(P, wf.fan.rays[i]))]
            for i in cone if i not in sset))
        new_weights[img] = w
    return WeightedFan(sf, wf.dim - len(sigma), new_weights)


def _project(P, x):
    return tuple(sum(x[i] * P[i][j] for i in range(len(x))) for j in range(len(P[0]) if P else 0))


def weight_at(wf, point):
    """Weight of the cone whose relative interior contains the point.

    The point must not lie on any cone of dimension below the cycle
    dimension; such non-generic points are rejected with the offending
    cone.  Points outside the support get weight 0.
    """
    located = locate(wf.fan, tuple(Fraction(x) for x in point))
    if located is None:
        return 0
    d = wf.fan.cone_dim(located)
    if d < wf.dim:
        raise InvalidInput(
            f"point {tuple(point)} is non-generic: it lies on the "
            f"dimension-{d} cone {located}")
    if d > wf.dim:
        return 0
    return wf.weight(located)


def relints_meet(gens1, gens2, n):
    """Whether two cones' relative interiors intersect (exact)."""
    n1, n2 = len(gens1), len(gens2)
    nv = n1 + n2
    cons = []
    for coord in range(n):
        coeffs = [Fraction(0)] * nv
        for k in range(n1):
            coeffs[k] = Fraction(gens1[k][coord])
        for k in range(n2):
            coeffs[n1 + k] = Fraction(-gens2[k][coord])
        cons.append((tuple(coeffs), "==", 0))
    for k in range(nv):
        unit = tuple(Fraction(1) if i == k else Fraction(0) for i in range(nv))
        cons.append((unit, ">", 0))
    return feasible_point(cons, nv, witness=False) is not None


def is_equivalent(w1, w2):
    """Whether two weighted fans represent the same tropical cycle.

    Probes every pair of weighted cones for open overlap (there the weights
    must agree) and checks symmetrically that neither support sticks out of
    the other.  No common refinement is built.
    """
    if w1.fan.rank != w2.fan.rank:
        raise InvalidInput("cycles live in different lattice ranks")
    if w1.is_empty() or w2.is_empty():
        return w1.is_empty() and w2.is_empty()
    if w1.dim != w2.dim:
        raise InvalidInput("cycles have different dimensions")
    n = w1.fan.rank
    for c1, v1 in w1.weights:
        for c2, v2 in w2.weights:
            if v1 != v2 and relints_meet(w1.fan.generators(c1), w2.fan.generators(c2), n):
                return False
    gens2 = [w2.fan.generators(c) for c, _ in w2.weights]
    for c1, _ in w1.weights:
        if cone_minus_cones(w1.fan.generators(c1), gens2, n) is not None:
            return False
    gens1 = [w1.fan.generators(c) for c, _ in w1.weights]
    for c2, _ in w2.weights:
        if cone_minus_cones(w2.fan.generators(c2), gens1, n) is not None:
            return False
    return True


@dataclass(frozen=True)
class PLFunction:
    """Integer piecewise-linear function on the domain fan (one form per cone)."""

    fan: Fan
    forms: tuple  # sorted tuple of (maximal cone, covector) pairs

    def __init__(self, fan, forms):
        object.__setattr__(self, "fan", fan)
        if isinstance(forms, dict):
            forms = forms.items()
        fm = {tuple(sorted(c)): tuple(int(x) for x in m) for c, m in forms}
        if set(fm) != set(fan.maximal_cones):
            raise InvalidInput("forms must cover exactly the maximal cones")
        object.__setattr__(self, "forms", tuple(sorted(fm.items())))
        # continuity: forms agree on shared rays
        for i, (c1, m1) in enumerate(self.forms):
            for c2, m2 in self.forms[i + 1:]:
                for r in set(c1) & set(c2):
                    ray = fan.rays[r]
                    v1 = sum(a * b for a, b in zip(m1, ray))
                    v2 = sum(a * b for a, b in zip(m2, ray))
                    if v1 != v2:
                        raise InvalidInput(
                            f"forms on cones {c1} and {c2} disagree on shared ray {r}")

    def form_on(self, cone):
        """The linear form valid on a cone contained in some maximal cone."""
        cset = set(cone)
        for c, m in self.forms:
            if cset <= set(c):
                return m
        raise InvalidInput(f"cone {tuple(cone)} is not contained in a linearity domain")

    def value(self, x):
        located = locate(self.fan, tuple(Fraction(v) for v in x))
        if located is None:
            raise InvalidInput(f"{x} is outside the domain of the function")
        m = self.form_on(located)
        return sum(a * b for a, b in zip(m, x))


def pl_divisor(phi, wf):
    """Divisor of a piecewise-linear function on a balanced cycle.

    For each codimension-one face of the support the output weight is
    minus the defect of the function against its linear extension on the
    face, so that (with minimal-weight conventions throughout) the divisor
    of the standard tropical line function on the plane is the tropical
    line with positive weights.  The result is balanced and independent of
    the normal-vector representatives.
    """
    if phi.fan.rank != wf.fan.rank:
        raise InvalidInput("function and cycle live in different ranks")
    if wf.fan.lineality:
        raise InvalidInput("divisors are only implemented for pointed fans")
    ok, violations = balance_check(wf)
    if not ok:
        raise InvalidInput(f"cycle is not balanced (first violation at {violations[0][0]})")
    # every weighted cone must sit inside one linearity domain
    form_of = {}
    for cone, _ in wf.weights:
        form_of[cone] = phi.form_on(cone)
    n = wf.fan.rank
    out = {}
    for tau, cofaces in _wall_list(wf).items():
        total = 0
        vsum = [0] * n
        for cone, w in cofaces:
            v = lattice_normal(wf.fan, cone, tau)
            m = form_of[cone]
            total += w * sum(a * b for a, b in zip(m, v))
            for j in range(n):
                vsum[j] += w * v[j]
        mtau = phi.form_on(tau)
        correction = sum(a * b for a, b in zip(mtau, vsum))
        weight = -(total - correction)
        if weight:
            out[tau] = weight
    return WeightedFan(wf.fan, wf.dim - 1, out)


def apply_lattice_map(wf, M):
    """Push a cycle through a unimodular lattice map (given as a square matrix)."""
    n = wf.fan.rank
    if len(M) != n or any(len(row) != n for row in M):
        raise InvalidInput("lattice map must be a square matrix of matching rank")
    new_rays = [primitive(mat_vec(M, r)) for r in wf.fan.rays]
    fan = Fan(n, new_rays, wf.fan.maximal_cones,
              lineality=[mat_vec(M, v) for v in wf.fan.lineality])
    # cone index tuples stay valid: rays are mapped in place
    return WeightedFan(fan, wf.dim, dict(wf.weights))


def recoarsen(wf, target, codim):
    """Express a cycle as a weight map on the codimension-``codim`` cones of a fan.

    Every target cone of that codimension is probed at relative-interior
    witnesses of its overlap cells with the cycle; the weight must be
    constant across the cone.  Cones outside the support get 0.  The
    re-expanded result must be equivalent to the input, otherwise the
    support escapes the target skeleton and the call fails loudly.
    """
    if target.lineality or wf.fan.lineality:
        raise InvalidInput("recoarsening is only implemented for pointed fans")
    d = target.dim() - codim
    if d != wf.dim:
        raise InvalidInput(
            f"dimension mismatch: cycle has dimension {wf.dim}, target codim-{codim} "
            f"cones have dimension {d}")
    n = target.rank
    cones = faces(target).get(d, [])
    weighted_gens = [wf.fan.generators(c) for c, _ in wf.weights]
    out = {}
    for sigma in cones:
        gens = target.generators(sigma)
        candidates = set()
        for (c, w) in wf.weights:
            if relints_meet(gens, wf.fan.generators(c), n):
                candidates.add(w)
        if cone_minus_cones(gens, weighted_gens, n) is not None:
            candidates.add(0)
        if len(candidates) > 1:
            raise InvalidInput(
                f"cycle weight is not constant on target cone {sigma}: saw {sorted(candidates)}")
        out[sigma] = candidates.pop() if candidates else 0
    expanded = WeightedFan(target, d, {c: w for c, w in out.items() if w})
    if not is_equivalent(expanded, wf):
        raise InvalidInput("cycle support escapes the target skeleton")
    return out
