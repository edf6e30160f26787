"""Matroids and their Bergman fans.

Matroids are stored by their explicit basis sets and validated against the
exchange axiom on construction.  Flats come from the closure operator by
brute force; the fan of a matroid is always produced in the fine structure
(one cone per chain of proper nonempty flats, plus the lineality line
spanned by the all-ones vector), which is unimodular and embeds into the
permutohedral completion of the same ground set.

The sign of the flat indicator vectors is a genuine convention choice; the
default ``sign="orbit"`` (+1) makes fans agree with initial-ideal
tropicalizations under the minimal-weight convention, while
``sign="paper"`` (-1) gives the mirrored fans.  Both are exposed
everywhere a fan is built.
"""

from dataclasses import dataclass
from itertools import combinations

from .cycles import WeightedFan
from .errors import InvalidInput
from .fans import Fan, quotient_chart
from .intlinalg import in_rat_span, primitive, rat_rank

_SIGNS = {"orbit": 1, "paper": -1}


@dataclass(frozen=True)
class Matroid:
    """Matroid on ground set {0, ..., ground-1} given by its bases."""

    ground: int
    bases: frozenset

    def __init__(self, ground, bases):
        ground = int(ground)
        bset = frozenset(frozenset(int(x) for x in b) for b in bases)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "bases", bset)
        if not bset:
            raise InvalidInput("a matroid needs at least one basis")
        sizes = {len(b) for b in bset}
        if len(sizes) != 1:
            raise InvalidInput("bases have different sizes")
        for b in bset:
            for x in b:
                if not 0 <= x < ground:
                    raise InvalidInput(f"basis element {x} outside the ground set")
        if ground <= 12 and not _exchange_holds(bset):
            raise InvalidInput("basis exchange axiom fails")

    @property
    def rank(self):
        return len(next(iter(self.bases)))

    def rank_of(self, subset):
        s = frozenset(subset)
        return max(len(s & b) for b in self.bases)

    def closure(self, subset):
        s = frozenset(subset)
        r = self.rank_of(s)
        return frozenset(x for x in range(self.ground) if self.rank_of(s | {x}) == r)

    def __hash__(self):
        return hash((self.ground, self.bases))


def _exchange_holds(bases):
    for b1 in bases:
        for b2 in bases:
            for x in b1 - b2:
                if not any(b1 - {x} | {y} in bases for y in b2 - b1):
                    return False
    return True


def uniform_matroid(r, e):
    if not 0 <= r <= e:
        raise InvalidInput("uniform matroid needs 0 <= rank <= ground size")
    return Matroid(e, [frozenset(c) for c in combinations(range(e), r)])


def matroid_from_matrix(columns_matrix):
    """Column matroid of an exact rational matrix (zero columns are loops)."""
    rows = [list(r) for r in columns_matrix]
    if not rows:
        raise InvalidInput("empty matrix")
    e = len(rows[0])
    cols = [[row[j] for row in rows] for j in range(e)]
    r = rat_rank(rows)
    if r == 0:
        return Matroid(e, [frozenset()])
    bases = []
    for c in combinations(range(e), r):
        sub = [[cols[j][i] for j in c] for i in range(len(rows))]
        if rat_rank(sub) == r:
            bases.append(frozenset(c))
    return Matroid(e, bases)


def is_loopfree(m):
    """True iff every element lies in some basis."""
    covered = set()
    for b in m.bases:
        covered |= b
    return len(covered) == m.ground


def loops(m):
    covered = set()
    for b in m.bases:
        covered |= b
    return sorted(set(range(m.ground)) - covered)


def dual(m):
    ground = frozenset(range(m.ground))
    return Matroid(m.ground, [ground - b for b in m.bases])


def flats(m):
    """All flats grouped by rank (closure operator, brute force)."""
    out = {}
    seen = set()
    for size in range(m.ground + 1):
        for s in combinations(range(m.ground), size):
            f = m.closure(s)
            if f not in seen:
                seen.add(f)
                out.setdefault(m.rank_of(f), []).append(f)
    for r in out:
        out[r].sort(key=sorted)
    return out


def circuits(m):
    """Minimal dependent sets."""
    found = []
    for size in range(1, m.rank + 2):
        for s in combinations(range(m.ground), size):
            fs = frozenset(s)
            if m.rank_of(fs) < len(fs) and not any(c < fs for c in found):
                found.append(fs)
    return found


def proper_flats(m):
    full = frozenset(range(m.ground))
    out = []
    for r, fl in sorted(flats(m).items()):
        for f in fl:
            if f and f != full:
                out.append(f)
    return out


def chains_of_flats(m):
    """All strictly increasing chains of proper nonempty flats (incl. the empty chain)."""
    if not is_loopfree(m):
        raise InvalidInput(f"matroid has loops {loops(m)}")
    pf = proper_flats(m)
    chains = [()]
    stack = [((), -1)]
    while stack:
        chain, last = stack.pop()
        top = pf[last] if last >= 0 else None
        for i in range(last + 1, len(pf)):
            if top is None or top < pf[i]:
                ext = chain + (pf[i],)
                chains.append(ext)
                stack.append((ext, i))
    chains.sort(key=lambda ch: (len(ch), [sorted(f) for f in ch]))
    return chains


def _flat_vector(flat, e, sign):
    return tuple(sign if i in flat else 0 for i in range(e))


def bergman_fan(m, sign="orbit"):
    """The fine fan of a loopfree matroid, in R^ground with its lineality line.

    Rays are the indicator vectors of the proper nonempty flats (sign fixed
    by the convention flag); a maximal chain of flats spans a maximal cone
    and carries weight 1.  The fan is pure of dimension rank(m), counting
    the lineality direction.
    """
    if sign not in _SIGNS:
        raise InvalidInput(f"unknown sign convention {sign!r}")
    if not is_loopfree(m):
        raise InvalidInput(f"matroid has loops {loops(m)}")
    s = _SIGNS[sign]
    e = m.ground
    pf = proper_flats(m)
    ray_index = {f: i for i, f in enumerate(pf)}
    rays = [_flat_vector(f, e, s) for f in pf]
    maximal = []
    for chain in chains_of_flats(m):
        if len(chain) == m.rank - 1:
            maximal.append(tuple(sorted(ray_index[f] for f in chain)))
    if not maximal:
        maximal = [()]
    lineality = [tuple(s for _ in range(e))]
    fan = Fan(e, rays, maximal, lineality=lineality, label=f"bergman(rank {m.rank})")
    return WeightedFan(fan, m.rank, {c: 1 for c in fan.maximal_cones})


def quotient_lineality(wf, lin_vectors):
    """Quotient a weighted fan by lattice vectors inside its lineality space.

    Coordinates on the quotient come from the Smith-form complement, except
    for the standard quotient by the all-ones vector which uses the chart
    (x0, ..., x(e-1)) -> (x1 - x0, ..., x(e-1) - x0).  Weights carry over.
    """
    lin_vectors = [tuple(int(x) for x in v) for v in lin_vectors]
    if not lin_vectors:
        return wf
    n = wf.fan.rank
    for v in lin_vectors:
        if not in_rat_span(wf.fan.lineality, v):
            raise InvalidInput(f"{v} is not contained in the lineality space")
    all_ones = tuple(1 for _ in range(n))
    span_is_ones = (len(lin_vectors) == 1
                    and primitive(lin_vectors[0]) in (all_ones, tuple(-1 for _ in range(n))))
    if span_is_ones:
        chart = [[0] * (n - 1) for _ in range(n)]
        chart[0] = [-1] * (n - 1)
        for i in range(1, n):
            chart[i][i - 1] = 1
    else:
        chart = quotient_chart(lin_vectors, n)
    k = n - len(chart[0]) if chart else n

    def image(x):
        return tuple(sum(x[i] * chart[i][j] for i in range(n)) for j in range(n - k))

    new_rays = []
    index = {}
    for r in wf.fan.rays:
        v = primitive(image(r))
        if not any(v):
            raise InvalidInput(f"ray {r} collapses under the quotient")
        if v not in index:
            index[v] = len(new_rays)
            new_rays.append(v)
    remaining = []
    for v in wf.fan.lineality:
        img = image(v)
        if any(img):
            remaining.append(img)
    from .intlinalg import saturation
    remaining = saturation([list(v) for v in remaining], n - k) if remaining else []
    cones = [tuple(sorted(index[primitive(image(wf.fan.rays[i]))] for i in c))
             for c in wf.fan.maximal_cones]
    fan = Fan(n - k, new_rays, cones, lineality=remaining,
              label=f"{wf.fan.label or 'fan'}/lineality")
    drop = len(lin_vectors) if not span_is_ones else 1
    weights = {}
    for c, w in wf.weights:
        img = tuple(sorted(index[primitive(image(wf.fan.rays[i]))] for i in c))
        weights[img] = w
    return WeightedFan(fan, wf.dim - (n - (n - k)) + 0 - 0 - (k - k) - 0 + -(k) + k - k + (0), weights) if False else WeightedFan(fan, wf.dim - k, weights)


def braid_completion(e, sign="orbit"):
    """Complete unimodular fan of rank e-1 from all chains of proper subsets.

    This is the quotient of the fine fan of the free matroid on ``e``
    elements; it contains the quotient fine fan of every loopfree matroid
    on the same ground set as a subfan.
    """
    if e < 1:
        raise InvalidInput("ground size must be at least 1")
    free = uniform_matroid(e, e)
    wf = bergman_fan(free, sign=sign)
    q = quotient_lineality(wf, [wf.fan.lineality[0]])
    fan = Fan(q.fan.rank, q.fan.rays, q.fan.maximal_cones, label=f"braid({e})")
    return fan


def quotient_bergman(m, sign="orbit"):
    """Quotient fine fan of a loopfree matroid (dimension rank - 1, pointed)."""
    wf = bergman_fan(m, sign=sign)
    return quotient_lineality(wf, [wf.fan.lineality[0]])


def all_loopfree_matroids(max_ground):
    """Every loopfree matroid on ground sets of size 1..max_ground.

    Enumerated by filtering all families of equal-size subsets through the
    exchange axiom; intended for small ground sets only.
    """
    out = []
    for e in range(1, max_ground + 1):
        for r in range(1, e + 1):
            subsets = [frozenset(c) for c in combinations(range(e), r)]
            for mask in range(1, 1 << len(subsets)):
                fam = frozenset(subsets[i] for i in range(len(subsets)) if mask >> i & 1)
                if not _exchange_holds(fam):
                    continue
                covered = set()
                for b in fam:
                    covered |= b
                if len(covered) != e:
                    continue
                out.append(Matroid(e, fam))
    return out
