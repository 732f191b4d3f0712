"""Small dense exact linear algebra over the rationals.

Matrices are tuples of tuples of Fraction.  Everything is exact by default;
passing ``tol > 0`` switches the pivot logic to a floating tolerance (used by
the optional float mode, never by the acceptance suite).
"""

from fractions import Fraction
from itertools import combinations

from .errors import BadCardinality, RankDeficient, SingularMatrix

Mat = tuple


def freeze(rows):
    """Coerce an iterable of rows into an immutable Fraction matrix."""
    return tuple(tuple(x if isinstance(x, float) else Fraction(x) for x in row) for row in rows)


def dims(a):
    return len(a), len(a[0]) if a else 0


def identity(k):
    return tuple(tuple(Fraction(int(i == j)) for j in range(k)) for i in range(k))


def transpose(a):
    return tuple(zip(*a))


def matmul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_eq(a, b, tol=0.0):
    if dims(a) != dims(b):
        return False
    if not tol:
        return a == b
    return all(abs(x - y) <= tol * max(1.0, abs(x), abs(y))
               for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def scale(a, c):
    return tuple(tuple(c * x for x in row) for row in a)


def _is_zero(x, tol):
    return abs(x) <= tol if tol else x == 0


def _pivot_row(rows, col, start, tol):
    if tol:
        best, best_val = -1, tol
        for r in range(start, len(rows)):
            if abs(rows[r][col]) > best_val:
                best, best_val = r, abs(rows[r][col])
        return best if best >= 0 else None
    for r in range(start, len(rows)):
        if rows[r][col] != 0:
            return r
    return None


def _eliminate(rows, tol):
    """Forward elimination in place; returns (pivot columns, row swap parity)."""
    n = len(rows)
    m = len(rows[0]) if rows else 0
    pivots = []
    sign = 1
    r = 0
    for c in range(m):
        if r >= n:
            break
        p = _pivot_row(rows, c, r, tol)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        pv = rows[r][c]
        for rr in range(r + 1, n):
            if not _is_zero(rows[rr][c], tol):
                f = rows[rr][c] / pv
                rows[rr] = [x - f * y for x, y in zip(rows[rr], rows[r])]
        pivots.append(c)
        r += 1
    return pivots, sign


def rank(a, tol=0.0):
    rows = [list(row) for row in a]
    pivots, _ = _eliminate(rows, tol)
    return len(pivots)


def det(a, tol=0.0):
    n, m = dims(a)
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    rows = [list(row) for row in a]
    pivots, sign = _eliminate(rows, tol)
    if len(pivots) < n:
        return 0.0 if tol else Fraction(0)
    out = Fraction(sign)
    for i in range(n):
        out = out * rows[i][pivots[i]]
    return out


def solve(a, b, tol=0.0):
    """Solve the square system a x = b exactly; raises SingularMatrix."""
    n, m = dims(a)
    if n != m or len(b) != n:
        raise ValueError("solve expects a square system")
    rows = [list(row) + [bi] for row, bi in zip(a, b)]
    pivots, _ = _eliminate(rows, tol)
    if len(pivots) < n:
        raise SingularMatrix("singular system")
    x = [None] * n
    for i in range(n - 1, -1, -1):
        c = pivots[i]
        acc = rows[i][n]
        for j in range(i + 1, n):
            acc -= rows[i][pivots[j]] * x[j]
        x[i] = acc / rows[i][c]
    return x


def columns(a, cols):
    """Select 0-based columns as a new matrix."""
    return tuple(tuple(row[c] for c in cols) for row in a)


def minor(a, index_set):
    """Determinant of the 1-based column subset ``index_set`` (all rows)."""
    k, m = dims(a)
    cols = sorted(index_set)
    if len(set(cols)) != len(cols):
        raise BadCardinality("repeated column index in %r" % (sorted(index_set),))
    if len(cols) != k:
        raise BadCardinality("need %d columns, got %d" % (k, len(cols)))
    if not all(1 <= c <= m for c in cols):
        raise BadCardinality("column index out of range in %r" % (cols,))
    return det(columns(a, [c - 1 for c in cols]))


def all_minors(a, tol=0.0):
    """All maximal (k x k) minors of a k x m matrix, keyed by 1-based columns."""
    k, m = dims(a)
    if rank(a, tol) < k:
        raise RankDeficient("matrix has rank below its row count")
    out = {}
    for cols in combinations(range(m), k):
        out[frozenset(c + 1 for c in cols)] = det(columns(a, cols), tol)
    return out
