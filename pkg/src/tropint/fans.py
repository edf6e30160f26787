"""Simplicial rational polyhedral fans.

A :class:`Fan` is given by its primitive ray generators and the ray-index
sets of its maximal cones; every subset of a maximal cone is implicitly a
cone of the fan, and the zero cone is always present.  Fans may carry a
lineality space (a tuple of independent generators contained in every
cone); the quotient constructions in :mod:`tropint.matroids` remove it.

Cones are passed around as sorted tuples of ray indices.  All geometric
predicates (point location, completeness, subfan extraction, the fan
axiom) are decided exactly, through rational elimination or
Fourier-Motzkin feasibility.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidInput, InvariantViolation
from .feasibility import feasible_point, project
from .intlinalg import (
    identity,
    int_kernel,
    int_solve,
    invariant_factors,
    primitive,
    rat_rank,
    rat_solve,
    saturation,
    snf,
    transpose,
    vec_gcd,
)

Cone = tuple[int, ...]


def _canonical_cones(cones):
    seen = sorted({tuple(sorted(c)) for c in cones})
    out = [c for c in seen if not any(set(c) < set(d) for d in seen)]
    return tuple(out)


@dataclass(frozen=True)
class Fan:
    """Simplicial fan in a lattice of the stated rank."""

    rank: int
    rays: tuple
    maximal_cones: tuple
    lineality: tuple = ()
    label: str = ""

    def __init__(self, rank, rays, maximal_cones, lineality=(), label=""):
        object.__setattr__(self, "rank", int(rank))
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in rays))
        object.__setattr__(self, "maximal_cones",
                           _canonical_cones([tuple(int(i) for i in c) for c in maximal_cones]))
        object.__setattr__(self, "lineality",
                           tuple(tuple(int(x) for x in v) for v in lineality))
        object.__setattr__(self, "label", label)
        self._check_basic()

    def _check_basic(self):
        for r in self.rays:
            if len(r) != self.rank:
                raise InvalidInput(f"ray {r} does not have rank {self.rank}")
        for v in self.lineality:
            if len(v) != self.rank:
                raise InvalidInput(f"lineality vector {v} does not have rank {self.rank}")
        for c in self.maximal_cones:
            for i in c:
                if not 0 <= i < len(self.rays):
                    raise InvalidInput(f"cone {c} references unknown ray {i}")
            if len(set(c)) != len(c):
                raise InvalidInput(f"cone {c} repeats a ray")

    @property
    def lineality_rank(self):
        return len(self.lineality)

    def cone_dim(self, cone):
        return len(cone) + self.lineality_rank

    def cone_rays(self, cone):
        return [self.rays[i] for i in cone]

    def generators(self, cone):
        """Ray generators of the cone plus the lineality generators."""
        return [self.rays[i] for i in cone] + list(self.lineality)

    def dim(self):
        if not self.maximal_cones:
            return self.lineality_rank
        return max(self.cone_dim(c) for c in self.maximal_cones)

    def is_pure(self):
        dims = {self.cone_dim(c) for c in self.maximal_cones} or {self.lineality_rank}
        return len(dims) == 1

    def cones(self, dim=None):
        """All cones of the fan, optionally only those of the given dimension."""
        by_dim = faces(self)
        if dim is None:
            return [c for d in sorted(by_dim) for c in by_dim[d]]
        return list(by_dim.get(dim, []))

    def relint_point(self, cone):
        """Canonical relative-interior lattice point: the ray sum (origin for {0})."""
        p = [0] * self.rank
        for i in cone:
            for j, x in enumerate(self.rays[i]):
                p[j] += x
        return tuple(p)

    def __hash__(self):
        return hash((self.rank, self.rays, self.maximal_cones, self.lineality))


@lru_cache(maxsize=None)
def faces(fan):
    """All cones grouped by dimension (each a sorted ray-index tuple).

    Includes the minimal cone ``()`` (the zero cone, or the lineality
    space when the fan has one).
    """
    seen = {()}
    for c in fan.maximal_cones:
        n = len(c)
        for mask in range(1 << n):
            seen.add(tuple(c[i] for i in range(n) if mask >> i & 1))
    out = {}
    for c in seen:
        out.setdefault(fan.cone_dim(c), []).append(c)
    for d in out:
        out[d].sort()
    return out


def validate_fan(fan):
    """Diagnostics for the fan axioms; an empty list means the fan is valid."""
    diags = []
    for i, r in enumerate(fan.rays):
        if not any(r):
            diags.append(f"ray {i} is zero")
        elif vec_gcd(r) != 1:
            diags.append(f"ray {i} = {r} is not primitive")
    for i, r in enumerate(fan.rays):
        for j in range(i + 1, len(fan.rays)):
            if r == fan.rays[j]:
                diags.append(f"rays {i} and {j} coincide")
    if fan.lineality and rat_rank([list(v) for v in fan.lineality]) != len(fan.lineality):
        diags.append("lineality generators are dependent")
    for c in fan.maximal_cones:
        gens = fan.generators(c)
        if gens and rat_rank([list(g) for g in gens]) != len(gens):
            diags.append(f"cone {c} is not simplicial (dependent generators)")
    if diags:
        return diags
    # fan axiom: pairwise intersections are the common-ray faces
    mx = fan.maximal_cones
    for a in range(len(mx)):
        for b in range(a + 1, len(mx)):
            w = _intersection_beyond_common_face(fan, mx[a], mx[b])
            if w is not None:
                diags.append(
                    f"cones {mx[a]} and {mx[b]} overlap beyond their common face "
                    f"(witness point {w})")
    return diags


def _intersection_beyond_common_face(fan, sigma, tau):
    """A point of sigma ∩ tau outside cone(common rays), or None."""
    common = set(sigma) & set(tau)
    n = fan.rank
    rs = fan.cone_rays(sigma)
    rt = fan.cone_rays(tau)
    lin = list(fan.lineality)
    ns, nt, nl = len(rs), len(rt), len(lin)
    # vars: lambda (ns), mu (nt), shared lineality coords (nl, free)
    nv = ns + nt + nl
    base = []
    for coord in range(n):
        coeffs = [Fraction(0)] * nv
        for k in range(ns):
            coeffs[k] = Fraction(rs[k][coord])
        for k in range(nt):
            coeffs[ns + k] = Fraction(-rt[k][coord])
        base.append((tuple(coeffs), "==", 0))
    for k in range(ns + nt):
        unit = tuple(Fraction(1) if i == k else Fraction(0) for i in range(nv))
        base.append((unit, ">=", 0))
    for pos, i in enumerate(sigma):
        if i in common:
            continue
        unit = tuple(Fraction(1) if t == pos else Fraction(0) for t in range(nv))
        point = feasible_point(base + [(unit, ">=", 1)], nv)
        if point is not None:
            lam = point[:ns]
            w = [sum(lam[k] * rs[k][coord] for k in range(ns)) for coord in range(n)]
            for k in range(nl):
                for coord in range(n):
                    w[coord] += point[ns + nt + k] * lin[k][coord]
            return tuple(w)
    return None


@lru_cache(maxsize=None)
def is_unimodular(fan):
    """Whether every maximal cone's generators extend to a lattice basis."""
    for c in fan.maximal_cones:
        gens = fan.generators(c)
        if not gens:
            continue
        if any(f != 1 for f in invariant_factors([list(g) for g in gens])):
            return False
        if len(invariant_factors([list(g) for g in gens])) != len(gens):
            return False
    return True


@lru_cache(maxsize=None)
def is_complete(fan, seed=0, samples=24):
    """Exact wall criterion plus seeded random coverage sampling.

    True iff the fan's support is the whole space: the fan is pure of top
    dimension, every codimension-one face lies in exactly two maximal
    cones, the maximal cones are wall-connected, and a deterministic
    sample of pseudo-random points all locate inside some cone.
    """
    if fan.lineality:
        raise InvalidInput("completeness is only decided for pointed fans")
    n = fan.rank
    if n == 0:
        return True
    mx = fan.maximal_cones
    if not mx or any(len(c) != n for c in mx):
        return False
    wall_count = {}
    for c in mx:
        for i in c:
            w = tuple(x for x in c if x != i)
            wall_count[w] = wall_count.get(w, 0) + 1
    if any(v != 2 for v in wall_count.values()):
        return False
    # wall-connectivity of the maximal cones
    adj = {c: set() for c in mx}
    by_wall = {}
    for c in mx:
        for i in c:
            by_wall.setdefault(tuple(x for x in c if x != i), []).append(c)
    for cs in by_wall.values():
        for a in cs:
            for b in cs:
                if a != b:
                    adj[a].add(b)
    seen = {mx[0]}
    stack = [mx[0]]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(mx):
        return False
    rng = random.Random(seed)
    for _ in range(samples):
        p = tuple(Fraction(rng.randint(-10**6, 10**6)) for _ in range(n))
        if locate(fan, p) is None:
            return False
    return True


def cone_coordinates(fan, cone, point):
    """Generator coordinates of a point in the cone, or None.

    Returns the (unique) coefficient tuple over the cone's rays followed by
    the lineality coordinates when ``point`` lies in the cone, i.e. when
    the ray coefficients are all nonnegative; None otherwise.
    """
    gens = fan.generators(cone)
    if not gens:
        return () if all(x == 0 for x in point) else None
    cols = transpose([list(g) for g in gens])
    sol = rat_solve(cols, point)
    if sol is None:
        return None
    if any(sol[k] < 0 for k in range(len(cone))):
        return None
    return sol


def locate(fan, point):
    """The smallest cone containing the point, or None if outside the support."""
    if fan.lineality:
        raise InvalidInput("locate is only implemented for pointed fans")
    point = tuple(Fraction(x) for x in point)
    for c in fan.maximal_cones:
        coords = cone_coordinates(fan, c, point)
        if coords is not None:
            return tuple(i for i, x in zip(c, coords) if x != 0)
    if all(x == 0 for x in point):
        return ()
    return None


@lru_cache(maxsize=None)
def _span_lattice(gens, n):
    """Canonical basis of the saturated lattice spanned by the generators."""
    return tuple(saturation([list(g) for g in gens], n))


def span_lattice_basis(fan, cone):
    """Basis of N_sigma = N ∩ span(sigma) for a cone of the fan."""
    return [list(v) for v in _span_lattice(tuple(fan.generators(cone)), fan.rank)]


@lru_cache(maxsize=None)
def _lattice_normal_cached(sigma_gens, tau_gens, side_ray, n):
    ns = _span_lattice(sigma_gens, n)
    nt = _span_lattice(tau_gens, n)
    d = len(ns)
    if len(nt) != d - 1:
        raise InvalidInput("lattice normal: tau is not a facet of sigma")
    cols = transpose([list(v) for v in ns])
    # coordinates of N_tau and of the side ray inside N_sigma (integral by saturation)
    tau_coords = []
    for v in nt:
        x = int_solve(cols, v)
        if x is None:
            raise InvariantViolation("facet lattice does not embed into the cone lattice")
        tau_coords.append(list(x))
    side = int_solve(cols, side_ray)
    if side is None:
        raise InvariantViolation("cone ray escapes the saturated cone lattice")
    if tau_coords:
        ker = [list(k) for k in int_kernel(tau_coords, ncols=d)]
    else:
        ker = [list(r) for r in identity(d)]
    if len(ker) != 1:
        raise InvariantViolation("quotient by a facet is not of rank one")
    phi = ker[0]
    val = sum(p * s for p, s in zip(phi, side))
    if val == 0:
        raise InvariantViolation("side ray lies in the facet span")
    if val < 0:
        phi = [-x for x in phi]
    rep_coords = int_solve([phi], (1,))
    if rep_coords is None:
        raise InvariantViolation("normal functional is not surjective")
    rep = [0] * n
    for k, ck in enumerate(rep_coords):
        for j in range(n):
            rep[j] += ck * ns[k][j]
    return tuple(rep)


def lattice_normal(fan, sigma, tau):
    """Representative of the lattice normal vector of sigma with respect to tau.

    ``tau`` must be a codimension-one face of ``sigma``.  The returned
    vector lies in N_sigma, generates N_sigma/N_tau and maps to the
    sigma-side of the quotient; the choice of representative is the
    deterministic one produced by the Hermite-form solver.
    """
    if not set(tau) < set(sigma) or len(tau) != len(sigma) - 1:
        raise InvalidInput(f"{tau} is not a facet of {sigma}")
    side_index = next(i for i in sigma if i not in tau)
    return _lattice_normal_cached(tuple(fan.generators(sigma)),
                                  tuple(fan.generators(tau)),
                                  fan.rays[side_index], fan.rank)


def quotient_chart(vectors, n):
    """Unimodular chart Z^n/<vectors> -> Z^(n-k) as an n x (n-k) matrix.

    The saturated span of ``vectors`` is the kernel; the chart applies as
    ``project_vector(P, x)``.  Computed from the Smith form, hence
    deterministic.
    """
    sat = saturation([list(v) for v in vectors], n)
    k = len(sat)
    if k == 0:
        return identity(n)
    S, U, V = snf([list(v) for v in sat])
    # rows of sat . V occupy the first k coordinates; quotient keeps the rest
    return [row[k:] for row in V]


def project_vector(P, x):
    return tuple(sum(x[i] * P[i][j] for i in range(len(x))) for j in range(len(P[0]) if P else 0))


def star(fan, sigma):
    """Star fan at a cone, with its integer projection chart.

    Returns ``(star_fan, P)`` where ``P`` is the chart onto the quotient
    lattice N/N_sigma; cones of the star are the images of the cones
    containing sigma, with ray images re-primitivized.
    """
    if fan.lineality:
        raise InvalidInput("star is only implemented for pointed fans")
    all_cones = faces(fan)
    if not any(sigma in cs for cs in all_cones.values()):
        raise InvalidInput(f"{sigma} is not a cone of the fan")
    P = quotient_chart([fan.rays[i] for i in sigma], fan.rank)
    m = fan.rank - len(sigma)
    new_rays = []
    ray_index = {}
    cones = []
    sset = set(sigma)
    for c in fan.maximal_cones:
        if not sset <= set(c):
            continue
        img = []
        for i in c:
            if i in sset:
                continue
            v = primitive(project_vector(P, fan.rays[i]))
            if v not in ray_index:
                ray_index[v] = len(new_rays)
                new_rays.append(v)
            img.append(ray_index[v])
        cones.append(tuple(sorted(img)))
    if not cones:
        cones = [()]
    # canonical ray order
    order = sorted(range(len(new_rays)), key=lambda i: new_rays[i])
    renum = {old: new for new, old in enumerate(order)}
    new_rays = [new_rays[i] for i in order]
    cones = [tuple(sorted(renum[i] for i in c)) for c in cones]
    return Fan(m, new_rays, cones, label=f"star({fan.label or 'fan'},{sigma})"), P


def cone_minus_cones(sigma_rays, others, n):
    """A point of cone(sigma_rays) outside the union of the other cones, or None.

    ``others`` is a list of generator lists (each possibly with lineality
    generators appended).  Exact set subtraction through Fourier-Motzkin
    projection; used for subfan extraction and support-coverage checks.
    """
    s = len(sigma_rays)
    if s == 0:
        return None if others else tuple(0 for _ in range(n))
    # coordinates on span(sigma): x = sum c_i r_i with c >= 0
    regions = [[(tuple(Fraction(1) if i == k else Fraction(0) for i in range(s)), ">=", 0)
                for k in range(s)]]
    for gens in others:
        t = len(gens)
        nv = s + t
        cons = []
        for coord in range(n):
            coeffs = [Fraction(0)] * nv
            for k in range(s):
                coeffs[k] = Fraction(sigma_rays[k][coord])
            for k in range(t):
                coeffs[s + k] = Fraction(-gens[k][coord])
            cons.append((tuple(coeffs), "==", 0))
        for k in range(t):
            unit = tuple(Fraction(1) if i == s + k else Fraction(0) for i in range(nv))
            cons.append((unit, ">=", 0))
        cell = project(cons, nv, range(s))
        new_regions = []
        for region in regions:
            prefix = []
            for con in cell:
                for neg in _negations(con):
                    cand = region + prefix + [neg]
                    if feasible_point(cand, s, witness=False) is not None:
                        new_regions.append(cand)
                prefix.append(con)
        regions = new_regions
        if not regions:
            return None
    point = feasible_point(regions[0], s)
    if point is None:  # pragma: no cover - regions are kept feasible
        raise InvariantViolation("feasible region lost its witness")
    return tuple(sum(point[k] * Fraction(sigma_rays[k][coord]) for k in range(s))
                 for coord in range(n))


def _negations(con):
    coeffs, rel, rhs = con
    neg = tuple(-c for c in coeffs)
    if rel == "==":
        return [(coeffs, ">", rhs), (neg, ">", -Fraction(rhs))]
    if rel == ">=":
        return [(neg, ">", -Fraction(rhs))]
    return [(neg, ">=", -Fraction(rhs))]


def cone_within_support(fan, cone, weighted):
    """Whether a cone of the fan lies inside the support of a weighted fan."""
    others = [weighted.fan.generators(c) for c, _ in weighted.items()]
    return cone_minus_cones(fan.generators(cone), others, fan.rank) is None


def subfan_on_support(fan, weighted):
    """The subfan of all cones contained in the support of a weighted fan.

    Raises :class:`InvalidInput` when the support is not a union of cones
    of the fan; the offending weighted cone is named, with a straddling
    witness point.
    """
    if weighted.fan.rank != fan.rank:
        raise InvalidInput("support lives in a different lattice rank")
    by_dim = faces(fan)
    inside = []
    others = [weighted.fan.generators(c) for c, _ in weighted.items()]
    for d in sorted(by_dim, reverse=True):
        for c in by_dim[d]:
            if any(set(c) <= set(big) for big in inside):
                inside.append(c)
                continue
            if cone_minus_cones(fan.generators(c), others, fan.rank) is None:
                inside.append(c)
    sub = Fan(fan.rank, fan.rays, _canonical_cones(inside) if inside else [()],
              lineality=fan.lineality, label=f"subfan({fan.label or 'fan'})")
    sub_gens = [sub.generators(c) for c in sub.maximal_cones]
    for c, _ in weighted.items():
        w = cone_minus_cones(weighted.fan.generators(c), sub_gens, fan.rank)
        if w is not None:
            raise InvalidInput(
                f"support is not a union of cones of the fan: weighted cone {c} "
                f"straddles the boundary near {w}")
    return sub
