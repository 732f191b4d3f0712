"""Totally positive symplectic side: the alternating form, elementary
generators, and the generator-product decomposition of standard networks.

Edges of a standard network are indexed by the pair of median strands
crossing at their midpoint; strand i is the one entering the disk at the
clockwise-side terminal of boundary vertex i.  The decomposition multiplies
one elementary generator per strand pair in reverse lexicographic order,
with parameter w or 1/w according to the parity of i+j.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import IndexOutOfRange, NotOdd, NotStandard, TooLarge
from .network import is_minimal, median_strands

TP_MAX_SIZE = 6


def lambda_form(size):
    """Tridiagonal alternating skew form: +1 at (i, i+1) for odd i."""
    if size < 2:
        raise ValueError("form needs size >= 2")
    zero = Fraction(0)
    rows = [[zero] * size for _ in range(size)]
    for i in range(size - 1):
        sign = Fraction((-1) ** i)
        rows[i][i + 1] = sign
        rows[i + 1][i] = -sign
    return linalg.freeze(rows)


@dataclass(frozen=True)
class ElementaryGenerator:
    kind: str        # "u" | "x" | "y" | "diagonal"
    index: int
    t: Fraction

    def triple(self):
        return (self.kind, self.index, self.t)


def generator_matrix(gen, size):
    """Matrix of an elementary generator inside Mat(size)."""
    i, t = gen.index, Fraction(gen.t)
    rows = [[Fraction(int(a == b)) for b in range(size)] for a in range(size)]
    if gen.kind == "u":
        if not 1 <= i <= size:
            raise IndexOutOfRange("u index %d outside 1..%d" % (i, size))
        if i + 1 <= size:
            rows[i][i - 1] += t          # E_{i+1,i}
        if i - 1 >= 1:
            rows[i - 2][i - 1] += t      # E_{i-1,i}
    elif gen.kind == "x":
        if not 1 <= i <= size - 1:
            raise IndexOutOfRange("x index %d outside 1..%d" % (i, size - 1))
        rows[i - 1][i] += t
    elif gen.kind == "y":
        if not 1 <= i <= size - 1:
            raise IndexOutOfRange("y index %d outside 1..%d" % (i, size - 1))
        rows[i][i - 1] += t
    elif gen.kind == "diagonal":
        if not 1 <= i <= size:
            raise IndexOutOfRange("diagonal index %d outside 1..%d" % (i, size))
        rows[i - 1][i - 1] = t
    else:
        raise ValueError("unknown generator kind %r" % gen.kind)
    return linalg.freeze(rows)


def strand_crossing_pairs(net):
    """Map edge id -> the pair of strand indices crossing at its midpoint."""
    strands = median_strands(net)
    indexed = {}
    for s in strands:
        if s.is_loop:
            raise NotStandard("network has a closed-loop strand")
        cw = [t for t in s.endpoints if t[1] == "cw"]
        if len(cw) != 1:
            raise NotStandard("strand terminals do not pair one clockwise "
                              "with one counterclockwise")
        idx = net.boundary_index(cw[0][0])
        if idx in indexed:
            raise NotStandard("two strands enter at boundary vertex %d" % idx)
        indexed[idx] = s
    pairs = {}
    for idx, s in indexed.items():
        for e in s.crossings:
            pairs.setdefault(e, []).append(idx)
    out = {}
    for e, ids in pairs.items():
        if len(ids) != 2 or ids[0] == ids[1]:
            raise NotStandard("edge %r is not a transversal crossing of two strands" % e)
        out[e] = (min(ids), max(ids))
    return out


def standard_decomposition(net):
    """Generator word and product matrix of a standard network.

    Requires an odd number of boundary nodes and exactly one edge per strand
    pair.  Returns (generators in application order, their product).
    """
    n = net.n_boundary
    if n % 2 == 0:
        raise NotOdd("standard decomposition needs an odd boundary count")
    if not is_minimal(net):
        raise NotStandard("network is not minimal")
    pairs = strand_crossing_pairs(net)
    by_pair = {}
    for e, pair in pairs.items():
        if pair in by_pair:
            raise NotStandard("strand pair %s crosses twice" % (pair,))
        by_pair[pair] = e
    expected = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    if set(by_pair) != expected:
        raise NotStandard("strand crossings %s do not realize every pair"
                          % sorted(by_pair))
    gens = []
    for (i, j) in sorted(expected, reverse=True):
        w = net.edge_map[by_pair[(i, j)]].weight
        t = w if (i + j) % 2 == 0 else 1 / w
        gens.append(ElementaryGenerator("u", j - i, t))
    size = n - 1
    product = linalg.identity(size)
    for g in gens:
        product = linalg.matmul(product, generator_matrix(g, size))
    return gens, product


@dataclass(frozen=True)
class PositivityReport:
    positive: bool
    checked: int
    witness: tuple = ()    # (rows, cols, value) of the first failure

    def __bool__(self):
        return self.positive


def check_totally_positive(A):
    """Exhaustively test that every minor of A is strictly positive."""
    n, m = linalg.dims(A)
    if n != m:
        raise ValueError("total positivity is defined for square matrices")
    if n > TP_MAX_SIZE:
        raise TooLarge("size %d exceeds the exhaustive minor limit %d" % (n, TP_MAX_SIZE))
    checked = 0
    for k in range(1, n + 1):
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                sub = tuple(tuple(A[r][c] for c in cols) for r in rows)
                val = linalg.det(sub)
                checked += 1
                if val <= 0:
                    return PositivityReport(False, checked,
                                            (rows, cols, val))
    return PositivityReport(True, checked)


def point_from_matrix(A):
    """The Grassmann representative (reversed signed identity | A)."""
    n, m = linalg.dims(A)
    if n != m:
        raise ValueError("expected a square matrix")
    rows = []
    for i in range(n):
        left = [Fraction(0)] * n
        left[n - 1 - i] = Fraction((-1) ** i)
        rows.append(list(left) + list(A[i]))
    return linalg.freeze(rows)
