"""Exact Fourier-Motzkin elimination over the rationals.

A constraint is a triple ``(coeffs, rel, rhs)`` read as
``coeffs . x  REL  rhs`` with ``rel`` one of ``"=="``, ``">="`` or ``">"``.
Coefficients and right-hand sides may be ints or Fractions.

:func:`feasible_point` eliminates variables one by one (equalities by exact
substitution, inequalities by pairwise combination) and reconstructs a
rational witness by back-substitution, or returns ``None`` together with the
derived contradictory constraint.  The procedure is fully deterministic.
"""

from fractions import Fraction


class Constraint:
    """Internal normal form ``a . x + b  (>= | > | ==)  0``."""

    __slots__ = ("a", "b", "rel")

    def __init__(self, a, b, rel):
        self.a = tuple(Fraction(x) for x in a)
        self.b = Fraction(b)
        self.rel = rel

    def __repr__(self):
        terms = " + ".join(f"{c}*x{i}" for i, c in enumerate(self.a) if c != 0)
        return f"{terms or '0'} + {self.b} {self.rel} 0"


def _normalize(constraints, nvars):
    out = []
    for coeffs, rel, rhs in constraints:
        coeffs = list(coeffs) + [0] * (nvars - len(coeffs))
        if rel not in ("==", ">=", ">"):
            raise ValueError(f"unknown relation {rel!r}")
        out.append(Constraint(coeffs, -Fraction(rhs), rel))
    return out


def _substitute(con, var, expr_a, expr_b):
    # replace x_var by expr_a . x + expr_b in con
    c = con.a[var]
    if c == 0:
        return con
    a = [x + c * e for x, e in zip(con.a, expr_a)]
    a[var] = Fraction(0)
    return Constraint(a, con.b + c * expr_b, con.rel)


def feasible_point(constraints, nvars, witness=True):
    """A rational point satisfying the constraints, or None if infeasible.

    Strict constraints are satisfied strictly by the witness.  With
    ``witness=False`` only feasibility is decided (slightly cheaper).
    """
    cons = _normalize(constraints, nvars)
    # (kind, data) log for back-substitution, in elimination order
    steps = []
    remaining = list(range(nvars))

    while remaining:
        # prefer eliminating by equality substitution
        eq = next((c for c in cons if c.rel == "==" and any(c.a[v] != 0 for v in remaining)), None)
        if eq is not None:
            var = max(v for v in remaining if eq.a[v] != 0)
            c = eq.a[var]
            expr_a = tuple((-x / c if i != var else Fraction(0)) for i, x in enumerate(eq.a))
            expr_b = -eq.b / c
            cons = [_substitute(k, var, expr_a, expr_b) for k in cons if k is not eq]
            steps.append(("subst", var, expr_a, expr_b))
            remaining.remove(var)
            continue

        var = remaining[-1]
        lowers, uppers, others = [], [], []
        for k in cons:
            c = k.a[var]
            if c == 0:
                others.append(k)
            elif c > 0:
                # c x + rest >= 0  ->  x >= -(rest)/c : lower bound
                lowers.append(k)
            else:
                uppers.append(k)
        new = list(others)
        for lo in lowers:
            for up in uppers:
                cl, cu = lo.a[var], up.a[var]
                # eliminate: cu*lo - cl*up has zero coefficient on var
                a = tuple(cl * y - cu * x for x, y in zip(lo.a, up.a))
                b = cl * up.b - cu * lo.b
                rel = ">" if (lo.rel == ">" or up.rel == ">") else ">="
                new.append(Constraint(a, b, rel))
        steps.append(("bounds", var, lowers, uppers))
        cons = new
        remaining.remove(var)

    # only numeric constraints remain
    for k in cons:
        val = k.b
        ok = (val == 0) if k.rel == "==" else (val > 0 if k.rel == ">" else val >= 0)
        if not ok:
            return None if not witness else None
    if not witness:
        return ()

    x = [Fraction(0)] * nvars
    for kind, var, *data in reversed(steps):
        if kind == "subst":
            expr_a, expr_b = data
            x[var] = sum(c * x[i] for i, c in enumerate(expr_a)) + expr_b
        else:
            lowers, uppers = data
            lo_val, lo_strict = None, False
            for k in lowers:
                c = k.a[var]
                v = -(sum(cc * x[i] for i, cc in enumerate(k.a) if i != var) + k.b) / c
                s = k.rel == ">"
                if lo_val is None or v > lo_val:
                    lo_val, lo_strict = v, s
                elif v == lo_val and s:
                    lo_strict = True
            up_val, up_strict = None, False
            for k in uppers:
                c = k.a[var]
                v = -(sum(cc * x[i] for i, cc in enumerate(k.a) if i != var) + k.b) / c
                s = k.rel == ">"
                if up_val is None or v < up_val:
                    up_val, up_strict = v, s
                elif v == up_val and s:
                    up_strict = True
            if lo_val is None and up_val is None:
                x[var] = Fraction(0)
            elif up_val is None:
                x[var] = lo_val + 1 if lo_strict else lo_val
            elif lo_val is None:
                x[var] = up_val - 1 if up_strict else up_val
            else:
                # feasibility of the pair is guaranteed by the FM combination
                x[var] = (lo_val + up_val) / 2 if lo_val != up_val else lo_val
    return tuple(x)


def is_feasible(constraints, nvars):
    return feasible_point(constraints, nvars, witness=False) is not None


def project(constraints, nvars, keep):
    """Eliminate all variables not in ``keep``; return constraints on them.

    The result is a list of ``(coeffs, rel, rhs)`` triples over the kept
    variables in their original order.
    """
    keep = sorted(keep)
    cons = _normalize(constraints, nvars)
    drop = [v for v in range(nvars) if v not in keep]
    for var in reversed(drop):
        eq = next((c for c in cons if c.rel == "==" and c.a[var] != 0), None)
        if eq is not None:
            c = eq.a[var]
            expr_a = tuple((-x / c if i != var else Fraction(0)) for i, x in enumerate(eq.a))
            expr_b = -eq.b / c
            cons = [_substitute(k, var, expr_a, expr_b) for k in cons if k is not eq]
            continue
        lowers, uppers, others = [], [], []
        for k in cons:
            c = k.a[var]
            (others if c == 0 else lowers if c > 0 else uppers).append(k)
        new = list(others)
        for lo in lowers:
            for up in uppers:
                cl, cu = lo.a[var], up.a[var]
                a = tuple(cl * y - cu * x for x, y in zip(lo.a, up.a))
                b = cl * up.b - cu * lo.b
                rel = ">" if (lo.rel == ">" or up.rel == ">") else ">="
                new.append(Constraint(a, b, rel))
        cons = new
    out = []
    pos = {v: i for i, v in enumerate(keep)}
    for k in cons:
        coeffs = [Fraction(0)] * len(keep)
        skip = False
        for i, c in enumerate(k.a):
            if c != 0:
                if i not in pos:
                    raise AssertionError("projection left a dropped variable")
                coeffs[pos[i]] = c
        # constant-only constraints that are trivially true can be dropped
        if all(c == 0 for c in coeffs):
            val = k.b
            ok = (val == 0) if k.rel == "==" else (val > 0 if k.rel == ">" else val >= 0)
            if ok:
                continue
        out.append((tuple(coeffs), k.rel, -k.b))
    return out
