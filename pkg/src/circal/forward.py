"""Forward problem: Kirchhoff Laplacian, response and resistance matrices.

All solves are exact over the rationals.  Vertex order everywhere is the
clockwise boundary order followed by inner vertices sorted by id.
"""

from fractions import Fraction

from . import linalg
from .errors import BadResponse, Disconnected, SingularInterior, SingularMatrix
from .network import ValidationReport, Violation


def vertex_order(net):
    return list(net.boundary_order) + sorted(net.inner_vertices())


def kirchhoff_laplacian(net):
    """Weighted graph Laplacian over all vertices (multi-edges summed)."""
    order = vertex_order(net)
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    zero = Fraction(0)
    rows = [[zero] * n for _ in range(n)]
    for e in net.edges:
        i, j = idx[e.u], idx[e.v]
        rows[i][j] -= e.weight
        rows[j][i] -= e.weight
        rows[i][i] += e.weight
        rows[j][j] += e.weight
    return linalg.freeze(rows)


def _blocks(net):
    L = kirchhoff_laplacian(net)
    n = net.n_boundary
    m = len(L)
    bb = tuple(row[:n] for row in L[:n])
    bi = tuple(row[n:] for row in L[:n])
    ib = tuple(row[:n] for row in L[n:])
    ii = tuple(row[n:] for row in L[n:])
    return bb, bi, ib, ii, m - n


def response_matrix(net):
    """Schur complement of the inner block: boundary voltages -> currents."""
    bb, bi, ib, ii, n_inner = _blocks(net)
    if n_inner == 0:
        return bb
    try:
        cols = [linalg.solve(ii, [row[c] for row in ib]) for c in range(net.n_boundary)]
    except SingularMatrix:
        raise SingularInterior("inner Laplacian block is singular "
                               "(an inner component is detached from the boundary)")
    n = net.n_boundary
    out = [[bb[i][j] - sum(bi[i][k] * cols[j][k] for k in range(n_inner))
            for j in range(n)] for i in range(n)]
    return linalg.freeze(out)


def harmonic_extension(net, boundary_voltages):
    """Voltages at every vertex given the boundary voltages.

    Returns a dict vertex id -> voltage; inner values solve the Kirchhoff
    balance L_II u_I = -L_IB u_B.
    """
    n = net.n_boundary
    if len(boundary_voltages) != n:
        raise ValueError("expected %d boundary voltages" % n)
    ub = [x if isinstance(x, float) else Fraction(x) for x in boundary_voltages]
    _, _, ib, ii, n_inner = _blocks(net)
    order = vertex_order(net)
    values = dict(zip(order[:n], ub))
    if n_inner:
        rhs = [-sum(ib[i][j] * ub[j] for j in range(n)) for i in range(n_inner)]
        try:
            ui = linalg.solve(ii, rhs)
        except SingularMatrix:
            raise SingularInterior("inner Laplacian block is singular")
        values.update(zip(order[n:], ui))
    return values


def boundary_currents(net, boundary_voltages):
    """Currents out of each boundary node for the harmonic extension."""
    u = harmonic_extension(net, boundary_voltages)
    out = []
    for v in net.boundary_order:
        acc = Fraction(0)
        for e in net.edges:
            if e.u == v:
                acc += e.weight * (u[e.u] - u[e.v])
            elif e.v == v:
                acc += e.weight * (u[e.v] - u[e.u])
        out.append(acc)
    return out


def effective_resistance_matrix(net, ground=None):
    """Pairwise effective resistances between boundary nodes.

    Solves the singular system M U = -e_i + e_j by grounding one boundary
    node (the last one by default): its row and column are deleted, the
    reduced nonsingular system is solved, and R_ij = |U_i - U_j|.  The result
    is independent of the grounding choice.
    """
    if not net.is_connected():
        raise Disconnected("effective resistances require a connected network")
    M = response_matrix(net)
    n = net.n_boundary
    g = n - 1 if ground is None else ground - 1
    keep = [i for i in range(n) if i != g]
    reduced = tuple(tuple(M[i][j] for j in keep) for i in keep)
    zero = Fraction(0)
    rows = [[zero] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            rhs = [Fraction(0)] * n
            rhs[a] -= 1
            rhs[b] += 1
            try:
                sol = linalg.solve(reduced, [rhs[i] for i in keep])
            except SingularMatrix:
                raise Disconnected("response matrix is too singular; network disconnected")
            u = {i: x for i, x in zip(keep, sol)}
            u[g] = Fraction(0)
            rows[a][b] = rows[b][a] = abs(u[a] - u[b])
    return linalg.freeze(rows)


def validate_response_properties(M, tol=0.0):
    """Symmetry, zero row sums and off-diagonal signs of a response matrix.

    Circular total non-negativity is not checked here; the equivalent minor
    non-negativity is tested on the Grassmannian embedding instead.
    """
    out = []
    n = len(M)
    if any(len(row) != n for row in M):
        return ValidationReport((Violation("shape", "matrix is not square"),))

    def nonzero(x):
        return abs(x) > tol if tol else x != 0

    for i in range(n):
        for j in range(i + 1, n):
            if nonzero(M[i][j] - M[j][i]):
                out.append(Violation("symmetry", "entries (%d,%d)/(%d,%d) differ"
                                     % (i + 1, j + 1, j + 1, i + 1)))
    for i in range(n):
        if nonzero(sum(M[i])):
            out.append(Violation("row sum", "row %d sums to %s" % (i + 1, sum(M[i]))))
    for i in range(n):
        for j in range(n):
            if i != j and M[i][j] > (tol if tol else 0):
                out.append(Violation("off-diagonal sign",
                                     "entry (%d,%d) = %s is positive" % (i + 1, j + 1, M[i][j])))
    return ValidationReport(tuple(out))


def require_valid_response(M, tol=0.0):
    report = validate_response_properties(M, tol)
    if not report.ok:
        raise BadResponse(str(report))
