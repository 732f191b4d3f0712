"""Grassmannian embeddings of networks and the twist map.

``omega_from_response`` realizes the n x 2n interleaved matrix whose row
space is the network's point of the non-negative Grassmannian Gr(n-1, 2n):
odd column 2j-1 of row i holds (-1)^(i+j) x_ij, even column 2j holds 1 in
rows j and j+1, and column 2n wraps cyclically with (-1)^n in row 1 and 1 in
row n.  ``omega_from_resistance`` realizes the companion pattern driven by
the second differences of effective resistances.  Both are truncated by
deleting the last row to produce the rank n-1 representative used everywhere
else.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import (BadCardinality, BadResistance, BadResponse, RankDeficient,
                     ScanExhausted, SingularMatrix, ZeroColumn)
from .forward import require_valid_response


@dataclass(frozen=True)
class OmegaPair:
    full: tuple      # n x 2n
    prime: tuple     # (n-1) x 2n, last row deleted

    def __iter__(self):
        return iter((self.full, self.prime))


def omega_matrix(M):
    """The untruncated n x 2n pattern; no validation."""
    n = len(M)
    if n < 2 or any(len(row) != n for row in M):
        raise BadResponse("response matrix must be square of size >= 2")
    zero = Fraction(0)
    rows = []
    for i in range(1, n + 1):
        row = [zero] * (2 * n)
        for j in range(1, n + 1):
            row[2 * j - 2] = (-1) ** (i + j) * M[i - 1][j - 1]
        rows.append(row)
    for j in range(1, n):
        rows[j - 1][2 * j - 1] = Fraction(1)
        rows[j][2 * j - 1] = Fraction(1)
    rows[0][2 * n - 1] = Fraction((-1) ** n)
    rows[n - 1][2 * n - 1] = Fraction(1)
    return linalg.freeze(rows)


def omega_from_response(M, validate=True, tol=0.0):
    """Embedding of a response matrix; raises BadResponse on invalid input."""
    if validate:
        require_valid_response(M, tol)
    full = omega_matrix(M)
    return OmegaPair(full, full[:-1])


def resistance_differences(R):
    """m_ij = -(R_ij + R_(i+1)(j+1) - R_i(j+1) - R_(i+1)j) / 2, indices mod n."""
    n = len(R)
    half = Fraction(1, 2)
    out = []
    for i in range(n):
        i1 = (i + 1) % n
        row = []
        for j in range(n):
            j1 = (j + 1) % n
            row.append(-half * (R[i][j] + R[i1][j1] - R[i][j1] - R[i1][j]))
        out.append(row)
    return linalg.freeze(out)


def omega_matrix_resistance(R):
    """Untruncated n x 2n resistance pattern; no validation."""
    n = len(R)
    if n < 2 or any(len(row) != n for row in R):
        raise BadResistance("resistance matrix must be square of size >= 2")
    m = resistance_differences(R)
    zero = Fraction(0)
    rows = []
    for i in range(1, n + 1):
        row = [zero] * (2 * n)
        for j in range(1, n + 1):
            row[2 * j - 1] = (-1) ** (i + j) * m[i - 1][j - 1]
        rows.append(row)
    rows[0][0] = Fraction(1)
    for j in range(1, n):
        rows[j - 1][2 * j] = Fraction(1)
        rows[j][2 * j] = Fraction(1)
    return linalg.freeze(rows)


def validate_resistance(R, tol=0.0):
    n = len(R)
    if any(len(row) != n for row in R):
        raise BadResistance("matrix is not square")
    for i in range(n):
        if (abs(R[i][i]) > tol) if tol else (R[i][i] != 0):
            raise BadResistance("diagonal entry (%d,%d) is nonzero" % (i + 1, i + 1))
        for j in range(n):
            if ((abs(R[i][j] - R[j][i]) > tol) if tol else (R[i][j] != R[j][i])):
                raise BadResistance("matrix is not symmetric at (%d,%d)" % (i + 1, j + 1))
            if i != j and R[i][j] <= 0:
                raise BadResistance("off-diagonal entry (%d,%d) is not positive" % (i + 1, j + 1))


def omega_from_resistance(R, validate=True, tol=0.0):
    """Embedding of an effective resistance matrix (same point as omega)."""
    if validate:
        validate_resistance(R, tol)
    full = omega_matrix_resistance(R)
    return OmegaPair(full, full[:-1])


def minor(A, index_set):
    """Determinant of the 1-based column subset of A (uses all rows)."""
    return linalg.minor(A, index_set)


@dataclass(frozen=True)
class PluckerVector:
    k: int
    m: int
    coords: tuple               # ((frozenset, value), ...) in lex order

    @property
    def sign_uniform(self):
        signs = {1 if v > 0 else -1 for _, v in self.coords if v != 0}
        return len(signs) <= 1

    def as_dict(self):
        return dict(self.coords)

    def normalized(self):
        """Divide by the first nonzero coordinate in lexicographic order."""
        pivot = next((v for _, v in self.coords if v != 0), None)
        if pivot is None:
            return self
        return PluckerVector(self.k, self.m,
                             tuple((s, v / pivot) for s, v in self.coords))


def plucker_vector(A, tol=0.0):
    """All maximal minors of a full-row-rank matrix, in lex subset order."""
    k, m = linalg.dims(A)
    if linalg.rank(A, tol) < k:
        raise RankDeficient("matrix has rank below its row count")
    coords = []
    for cols in combinations(range(1, m + 1), k):
        coords.append((frozenset(cols), linalg.det(linalg.columns(A, [c - 1 for c in cols]), tol)))
    return PluckerVector(k, m, tuple(coords))


def same_projective_point(p, q):
    """Exact projective equality of two Plucker vectors."""
    if (p.k, p.m) != (q.k, q.m):
        return False
    return p.normalized().coords == q.normalized().coords


def twist(A, tol=0.0):
    """Column-wise dual of A under the cyclic greedy span scan.

    For each column i, columns are scanned cyclically from i, greedily
    collecting those that enlarge the span until k independent columns are
    found; the twist column is the unique vector pairing to 1 with column i
    and to 0 with the other collected columns.
    """
    k, m = linalg.dims(A)
    cols = [tuple(A[r][c] for r in range(k)) for c in range(m)]

    def is_zero(x):
        return abs(x) <= tol if tol else x == 0

    out_cols = []
    for i in range(m):
        if all(is_zero(x) for x in cols[i]):
            raise ZeroColumn("column %d is zero" % (i + 1))
        basis = []
        rows = []

        def try_add(c):
            cand = rows + [list(cols[c])]
            if linalg.rank(cand, tol) > len(rows):
                rows.append(list(cols[c]))
                basis.append(c)

        j = i
        for _ in range(m):
            try_add(j)
            if len(basis) == k:
                break
            j = (j + 1) % m
        if len(basis) < k:
            raise ScanExhausted("only %d independent columns reachable from column %d"
                                % (len(basis), i + 1))
        rhs = [Fraction(0)] * k
        rhs[0] = Fraction(1)
        try:
            tau_i = linalg.solve(linalg.freeze(rows), rhs, tol)
        except SingularMatrix:
            raise ScanExhausted("collected columns degenerate at column %d" % (i + 1))
        out_cols.append(tau_i)
    return tuple(tuple(out_cols[c][r] for c in range(m)) for r in range(k))


def alternating_sums(row):
    """The two alternating sums that vanish on the omega row space."""
    m = len(row)
    even = sum((-1) ** i * row[2 * i - 1] for i in range(1, m // 2 + 1))
    odd = sum((-1) ** i * row[2 * i - 2] for i in range(1, m // 2 + 1))
    return odd, even
