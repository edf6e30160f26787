"""Exact integer and rational linear algebra.

Everything here works over Python's arbitrary-precision ``int`` and
``fractions.Fraction``; there is no floating point anywhere.  Matrices are
plain lists of lists (row-major), vectors are tuples.  The normal-form
routines (Hermite and Smith) are the substrate for all lattice
computations: saturated kernels, integer solving, lattice indices and
unimodular coordinate changes.

The Hermite normal form computed by :func:`hnf` is the canonical row-style
one (positive pivots, entries above a pivot reduced into ``[0, pivot)``),
so kernels and solutions derived from it are deterministic.
"""

from fractions import Fraction
from math import gcd

Vector = tuple[int, ...]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n = len(A)
    k = len(B)
    m = len(B[0]) if k else 0
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mat_vec(A, x):
    return tuple(sum(row[j] * x[j] for j in range(len(x))) for row in A)


def transpose(A):
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def vec_gcd(v):
    g = 0
    for a in v:
        g = gcd(g, abs(a))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = vec_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def det(A):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def hnf(A):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H = U @ A``, ``U`` unimodular and ``H`` in
    canonical HNF: pivot columns strictly increase, pivots are positive,
    entries above each pivot are reduced into ``[0, pivot)``, zero rows
    come last.  Pivoting picks the entry of minimal absolute value to
    limit coefficient growth.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(row) for row in A]
    U = identity(m)

    def row_sub(i, k, q):
        if q:
            Hi, Hk = H[i], H[k]
            for j in range(n):
                Hi[j] -= q * Hk[j]
            Ui, Uk = U[i], U[k]
            for j in range(m):
                Ui[j] -= q * Uk[j]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            piv = -1
            for i in range(r, m):
                if H[i][c] != 0 and (piv < 0 or abs(H[i][c]) < abs(H[piv][c])):
                    piv = i
            if piv < 0:
                break
            H[r], H[piv] = H[piv], H[r]
            U[r], U[piv] = U[piv], U[r]
            clear = True
            for i in range(r + 1, m):
                if H[i][c] != 0:
                    row_sub(i, r, H[i][c] // H[r][c])
                    if H[i][c] != 0:
                        clear = False
            if clear:
                if H[r][c] < 0:
                    H[r] = [-x for x in H[r]]
                    U[r] = [-x for x in U[r]]
                for i in range(r):
                    row_sub(i, r, H[i][c] // H[r][c])
                r += 1
                break
    return H, U


def snf(A):
    """Smith normal form.

    Returns ``(S, U, V)`` with ``S = U @ A @ V``, ``U`` and ``V`` unimodular
    and ``S`` diagonal with nonnegative invariant factors ``d1 | d2 | ...``.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [list(row) for row in A]
    U = identity(m)
    V = identity(n)

    def row_sub(i, k, q):
        if q:
            for j in range(n):
                S[i][j] -= q * S[k][j]
            for j in range(m):
                U[i][j] -= q * U[k][j]

    def col_sub(j, k, q):
        if q:
            for i in range(m):
                S[i][j] -= q * S[i][k]
            for i in range(n):
                V[i][j] -= q * V[i][k]

    def swap_rows(i, k):
        if i != k:
            S[i], S[k] = S[k], S[i]
            U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        if j != k:
            for row in S:
                row[j], row[k] = row[k], row[j]
            for row in V:
                row[j], row[k] = row[k], row[j]

    r = min(m, n)
    t = 0
    while t < r:
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if S[i][j] != 0 and (piv is None or abs(S[i][j]) < abs(S[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        clear = True
        for i in range(t + 1, m):
            if S[i][t] != 0:
                row_sub(i, t, S[i][t] // S[t][t])
                if S[i][t] != 0:
                    clear = False
        for j in range(t + 1, n):
            if S[t][j] != 0:
                col_sub(j, t, S[t][j] // S[t][t])
                if S[t][j] != 0:
                    clear = False
        if clear:
            t += 1
        # otherwise re-pick a (now smaller) pivot at the same position

    # zeros on the diagonal sink to the end
    for i in range(r):
        for k in range(r - 1 - i):
            if S[k][k] == 0 and S[k + 1][k + 1] != 0:
                swap_rows(k, k + 1)
                swap_cols(k, k + 1)

    # enforce the divisibility chain d_i | d_{i+1}
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            a, b = S[i][i], S[i + 1][i + 1]
            if a != 0 and b % a != 0:
                _divisibility_fix(S, U, V, i, m, n)
                changed = True

    for i in range(r):
        if S[i][i] < 0:
            for j in range(n):
                S[i][j] = -S[i][j]
            for j in range(m):
                U[i][j] = -U[i][j]
    return S, U, V


def _divisibility_fix(S, U, V, i, m, n):
    # S diagonal at i, i+1 with d_i not dividing d_{i+1}; replace the pair by
    # (gcd, product/gcd) using operations confined to rows/cols i and i+1.
    for j in range(n):
        S[i][j] += S[i + 1][j]
    for j in range(m):
        U[i][j] += U[i + 1][j]
    # row i is now (d_i, d_{i+1}); Euclid with column ops
    while S[i][i + 1] != 0:
        if S[i][i] != 0:
            q = S[i][i + 1] // S[i][i]
            if q:
                for k in range(m):
                    S[k][i + 1] -= q * S[k][i]
                for k in range(n):
                    V[k][i + 1] -= q * V[k][i]
        if S[i][i + 1] != 0:
            for row in S:
                row[i], row[i + 1] = row[i + 1], row[i]
            for row in V:
                row[i], row[i + 1] = row[i + 1], row[i]
    # clear the fill-in below the new pivot (exact: the pivot is the gcd)
    if S[i + 1][i] != 0:
        q = S[i + 1][i] // S[i][i]
        for j in range(n):
            S[i + 1][j] -= q * S[i][j]
        for j in range(m):
            U[i + 1][j] -= q * U[i][j]


def int_kernel(A, ncols=None):
    """Basis of the saturated integer kernel ``{x in Z^n : A x = 0}``.

    The result is the canonical (HNF-reduced) basis; every integer kernel
    element is an integer combination of the returned vectors.  ``ncols``
    must be given when ``A`` has no rows.
    """
    m = len(A)
    n = len(A[0]) if m else ncols
    if n is None:
        raise ValueError("int_kernel of an empty matrix needs ncols")
    if m == 0:
        return [tuple(row) for row in identity(n)]
    # HNF of [A^T | I]: rows whose A^T-part vanished carry kernel vectors.
    aug = [[A[i][j] for i in range(m)] + [1 if t == j else 0 for t in range(n)]
           for j in range(n)]
    H, _ = hnf(aug)
    out = []
    for row in H:
        if all(x == 0 for x in row[:m]):
            v = tuple(row[m:])
            if any(v):
                out.append(v)
    return out


def int_solve(A, b):
    """One integer solution ``x`` of ``A x = b``, or ``None`` if none exists.

    Uses the column Hermite form ``A V = H`` and forward substitution; the
    returned solution is the deterministic one picked by that normal form.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if n == 0:
        return () if all(x == 0 for x in b) else None
    R, W = hnf(transpose(A))  # R = W A^T, hence A W^T = R^T
    V = transpose(W)
    pivot_of_row = {}
    for i, row in enumerate(R):
        pc = next((j for j, x in enumerate(row) if x != 0), None)
        if pc is not None:
            pivot_of_row[pc] = i
    residual = list(b)
    y = [0] * n
    for r in range(m):
        if r in pivot_of_row:
            i = pivot_of_row[r]
            if residual[r] % R[i][r] != 0:
                return None
            y[i] = residual[r] // R[i][r]
            if y[i]:
                for rr in range(m):
                    residual[rr] -= R[i][rr] * y[i]
        elif residual[r] != 0:
            return None
    if any(residual):
        return None
    return mat_vec(V, tuple(y))


def invariant_factors(A):
    S, _, _ = snf(A)
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0)) if S[i][i] != 0]


def lattice_index(gens, n):
    """Index of the sublattice of Z^n spanned by ``gens``; None if infinite.

    Equals the product of the invariant factors when the span has full
    rank ``n``; rank-deficient spans have infinite index.
    """
    if n == 0:
        return 1
    if not gens:
        return None
    facs = invariant_factors([list(g) for g in gens])
    if len(facs) < n:
        return None
    idx = 1
    for d in facs:
        idx *= d
    return idx


def int_inverse(A):
    """Exact inverse of a unimodular integer matrix."""
    inv = rat_inverse(A)
    out = [[int(x) for x in row] for row in inv]
    for exact, rounded in zip(inv, out):
        for x, y in zip(exact, rounded):
            if x != y:
                raise ValueError("matrix is not unimodular")
    return out


# --- rational elimination -------------------------------------------------

def rat_rank(A):
    """Rank over Q of a matrix with integer or Fraction entries."""
    M = [[Fraction(x) for x in row] for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pv = M[rank][c]
        M[rank] = [x / pv for x in M[rank]]
        for i in range(m):
            if i != rank and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def _rref(A, b=None):
    m = len(A)
    n = len(A[0]) if m else 0
    w = n + (1 if b is not None else 0)
    M = [[Fraction(x) for x in row] + ([Fraction(b[i])] if b is not None else [])
         for i, row in enumerate(A)]
    pivots = []
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pv = M[rank][c]
        M[rank] = [x / pv for x in M[rank]]
        for i in range(m):
            if i != rank and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[rank])]
        pivots.append(c)
        rank += 1
    return M, pivots, rank


def rat_solve(A, b):
    """Some rational solution of ``A x = b`` or None if inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    M, pivots, rank = _rref(A, b)
    for i in range(rank, m):
        if M[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = M[i][n]
    return tuple(x)


def rat_nullspace(A):
    """Basis over Q of the right nullspace of ``A``."""
    m = len(A)
    n = len(A[0]) if m else 0
    M, pivots, rank = _rref(A)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -M[i][fc]
        basis.append(tuple(v))
    return basis


def rat_solution_space(A, b):
    """Particular solution and homogeneous basis of ``A x = b`` over Q.

    Returns ``(p, basis)`` or ``None`` when inconsistent; the solution set
    is ``p + span(basis)``.
    """
    n = len(A[0]) if A else 0
    if not A:
        p = tuple(Fraction(0) for _ in range(n))
        basis = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))
                 for i in range(n)]
        return p, basis
    p = rat_solve(A, b)
    if p is None:
        return None
    return p, rat_nullspace(A)


def rat_inverse(A):
    """Inverse over Q of a square matrix; raises on singular input."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(1 if j == i else 0) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [row[n:] for row in M]


def in_rat_span(vectors, target):
    """Whether ``target`` lies in the Q-span of ``vectors``."""
    vs = [list(v) for v in vectors]
    if not vs:
        return all(x == 0 for x in target)
    return rat_rank(vs) == rat_rank(vs + [list(target)])


def saturation(vectors, n):
    """Canonical basis of ``Z^n ∩ span_Q(vectors)`` (the saturated span)."""
    vs = [list(v) for v in vectors if any(v)]
    if not vs:
        return []
    orth = int_kernel(vs, ncols=n)
    if not orth:
        return [tuple(row) for row in identity(n)]
    return int_kernel([list(w) for w in orth], ncols=n)
