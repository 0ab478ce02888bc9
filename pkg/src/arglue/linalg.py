"""Exact linear algebra over the rationals.

Matrices are plain lists of rows, entries are ``fractions.Fraction``.
Everything here is small and dense; clarity over asymptotics.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows, cols):
    return [[ZERO] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def shape(a):
    return (len(a), len(a[0]) if a else 0)


def copy_matrix(a):
    return [row[:] for row in a]


def matmul(a, b):
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"shape mismatch {ra}x{ca} * {rb}x{cb}")
    out = zeros(ra, cb)
    for i in range(ra):
        arow = a[i]
        orow = out[i]
        for k in range(ca):
            x = arow[k]
            if x:
                brow = b[k]
                for j in range(cb):
                    if brow[j]:
                        orow[j] += x * brow[j]
    return out


def matadd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def matsub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a, c):
    c = Fraction(c)
    return [[c * x for x in row] for row in a]


def transpose(a):
    r, c = shape(a)
    return [[a[i][j] for i in range(r)] for j in range(c)]


def hstack(mats):
    mats = [m for m in mats if shape(m)[1] > 0 or True]
    rows = max((len(m) for m in mats), default=0)
    out = []
    for i in range(rows):
        row = []
        for m in mats:
            row.extend(m[i] if i < len(m) else [])
        out.append(row)
    return out


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


def _row_echelon(a):
    """In-place row echelon form; returns list of pivot column indices."""
    r, c = shape(a)
    pivots = []
    prow = 0
    for col in range(c):
        piv = None
        for i in range(prow, r):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[prow], a[piv] = a[piv], a[prow]
        inv = ONE / a[prow][col]
        a[prow] = [x * inv for x in a[prow]]
        for i in range(r):
            if i != prow and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[prow])]
        pivots.append(col)
        prow += 1
        if prow == r:
            break
    return pivots


def rref(a):
    """Reduced row echelon form (copy) and pivot columns."""
    m = copy_matrix(a)
    pivots = _row_echelon(m)
    return m, pivots


def rank(a):
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a):
    """Basis of the right kernel of ``a``, as a list of column vectors."""
    r, c = shape(a)
    if c == 0:
        return []
    if r == 0:
        return [[ONE if i == j else ZERO for i in range(c)] for j in range(c)]
    m, pivots = rref(a)
    free = [j for j in range(c) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * c
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis.append(v)
    return basis


def columns_to_matrix(cols, nrows):
    """Pack a list of column vectors into a matrix with ``nrows`` rows."""
    if not cols:
        return [[] for _ in range(nrows)]
    return [[col[i] for col in cols] for i in range(nrows)]


def matrix_to_columns(a):
    r, c = shape(a)
    return [[a[i][j] for i in range(r)] for j in range(c)]


def solve(a, b):
    """Solve a X = b for the matrix X; returns None if inconsistent."""
    r, ca = shape(a)
    rb, cb = shape(b)
    if r != rb:
        raise ValueError("row mismatch in solve")
    aug = [a[i][:] + b[i][:] for i in range(r)]
    m, pivots = rref(aug)
    for p in pivots:
        if p >= ca:
            return None
    x = zeros(ca, cb)
    for i, p in enumerate(pivots):
        for j in range(cb):
            x[p][j] = m[i][ca + j]
    return x


def invert(a):
    n, c = shape(a)
    if n != c:
        return None
    x = solve(a, identity(n))
    if x is None:
        return None
    # solve() guarantees a left-solution; square + full pivots means inverse
    if rank(a) != n:
        return None
    return x


def column_space_basis(a):
    """Indices of a maximal independent subset of columns, plus those columns."""
    r, c = shape(a)
    m, pivots = rref(a)
    cols = matrix_to_columns(a)
    return pivots, [cols[p] for p in pivots]


def complement_basis(cols, dim):
    """Extend independent columns spanning a subspace of k^dim to a full basis
    using standard basis vectors; return the indices of the chosen standard
    vectors and the combined invertible matrix [cols | std]."""
    chosen = []
    current = list(cols)
    cur_rank = rank(columns_to_matrix(current, dim)) if current else 0
    for i in range(dim):
        if cur_rank == dim:
            break
        e = [ONE if j == i else ZERO for j in range(dim)]
        trial = current + [e]
        r2 = rank(columns_to_matrix(trial, dim))
        if r2 > cur_rank:
            chosen.append(i)
            current = trial
            cur_rank = r2
    return chosen, columns_to_matrix(current, dim)
