"""Circular planar electrical networks: data model, validation, strands.

A network is a disk-embedded weighted graph.  Boundary vertices are numbered
1..n by their position in ``boundary_order`` (clockwise).  The embedding is
user-supplied as a clockwise rotation system; it is never inferred.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .embedding import Dart, DiskEmbedding, is_arc


@dataclass(frozen=True)
class Vertex:
    id: str
    boundary: bool


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str
    weight: Fraction

    def other(self, vertex):
        return self.v if vertex == self.u else self.u


@dataclass(frozen=True)
class PlanarNetwork:
    n_boundary: int
    vertices: tuple
    edges: tuple
    rotation: tuple          # ((vertex id, (edge ids clockwise)), ...)
    boundary_order: tuple

    @staticmethod
    def build(vertices, edges, rotation, boundary_order, n_boundary=None):
        """Friendlier constructor taking plain lists and dicts.

        vertices: iterable of (id, boundary flag)
        edges: iterable of (id, u, v, weight)
        rotation: {vertex id: [edge ids clockwise]}; boundary lists start at
        the edge nearest the arc toward the next clockwise boundary vertex.
        """
        vs = tuple(Vertex(str(i), bool(b)) for i, b in vertices)
        es = tuple(Edge(str(i), str(u), str(v),
                        w if isinstance(w, float) else Fraction(w))
                   for i, u, v, w in edges)
        rot = tuple((str(v), tuple(str(e) for e in r))
                    for v, r in dict(rotation).items())
        order = tuple(str(v) for v in boundary_order)
        return PlanarNetwork(len(order) if n_boundary is None else n_boundary,
                             vs, es, rot, order)

    @cached_property
    def vertex_map(self):
        return {v.id: v for v in self.vertices}

    @cached_property
    def edge_map(self):
        return {e.id: e for e in self.edges}

    @cached_property
    def rotation_map(self):
        return {v: r for v, r in self.rotation}

    @cached_property
    def embedding(self):
        return DiskEmbedding({v.id: v.boundary for v in self.vertices},
                             {e.id: (e.u, e.v) for e in self.edges},
                             self.rotation_map, self.boundary_order)

    def boundary_index(self, vertex_id):
        """1-based clockwise number of a boundary vertex."""
        return self.boundary_order.index(vertex_id) + 1

    def inner_vertices(self):
        return [v.id for v in self.vertices if not v.boundary]

    def with_weights(self, weights):
        """Copy of the network with edge weights replaced from a dict."""
        es = tuple(Edge(e.id, e.u, e.v,
                        weights[e.id] if isinstance(weights[e.id], float)
                        else Fraction(weights[e.id]))
                   for e in self.edges)
        return PlanarNetwork(self.n_boundary, self.vertices, es,
                             self.rotation, self.boundary_order)

    def is_connected(self):
        return self.embedding.is_connected()


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self):
        return "%s: %s" % (self.code, self.message)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def validate_network(net):
    """Check every structural invariant; an empty report means valid.

    Full connectivity is deliberately not required here (forward operations
    tolerate several components as long as each touches the boundary);
    recovery and the Temperley construction enforce connectivity themselves.
    """
    out = []
    if net.n_boundary < 1:
        out.append(Violation("boundary-count", "n_boundary must be positive"))
    if net.n_boundary != len(net.boundary_order):
        out.append(Violation("boundary-count",
                             "n_boundary=%d but boundary_order has %d entries"
                             % (net.n_boundary, len(net.boundary_order))))
    ids = [v.id for v in net.vertices]
    if len(set(ids)) != len(ids):
        out.append(Violation("duplicate-id", "vertex ids are not unique"))
    eids = [e.id for e in net.edges]
    if len(set(eids)) != len(eids):
        out.append(Violation("duplicate-id", "edge ids are not unique"))
    for e in net.edges:
        if e.weight <= 0:
            out.append(Violation("non-positive weight",
                                 "edge %r has weight %s" % (e.id, e.weight)))
    for code, msg in net.embedding.structure_violations():
        out.append(Violation(code, msg))
    if not out:
        if not net.embedding.euler_ok():
            out.append(Violation("non-planar rotation",
                                 "face tracing violates Euler's relation for a disk"))
        else:
            boundary = set(net.boundary_order)
            for comp in net.embedding.components():
                if not comp & boundary:
                    out.append(Violation("stranded-component",
                                         "component %s has no boundary vertex"
                                         % sorted(comp)))
    return ValidationReport(tuple(out))


def faces(net):
    """All faces of the disk complement, boundary faces included."""
    fs, _ = net.embedding.trace_faces()
    return fs


@dataclass(frozen=True)
class EdgeOverlay:
    edge: str
    midpoint: str
    faces: tuple      # (right face id, left face id) w.r.t. the stored (u, v)
    corners: tuple    # four (vertex, face) pairs clockwise around the midpoint


def dual_with_intersections(net):
    """Overlay scaffold: edge midpoints, their faces and corners.

    This is the data the Temperley construction consumes: for each edge, the
    two incident faces and the four (vertex, face) corners in clockwise order
    around the edge midpoint.
    """
    emb = net.embedding
    emb.trace_faces()
    out = {}
    for e in net.edges:
        d = Dart(e.id, 0)
        right = emb.face_of(d)
        left = emb.face_of(d.reverse)
        corners = ((e.v, right.id), (e.u, right.id), (e.u, left.id), (e.v, left.id))
        out[e.id] = EdgeOverlay(e.id, "mid:" + e.id, (right.id, left.id), corners)
    return out


@dataclass(frozen=True)
class Strand:
    """A strand of the median graph.

    ``crossings`` lists the edges whose midpoints the strand passes, in
    order.  Path strands carry their two boundary terminals (vertex id plus
    the side of that vertex the terminal sits on); closed strands carry none
    and are flagged as loops.
    """
    crossings: tuple
    endpoints: tuple = ()
    is_loop: bool = False


def _sector_walk(net):
    """Transition helpers for the straight-through walk over angular sectors.

    A state (v, e, side) means: inside the sector at vertex v flanking edge e
    on the given side, moving toward the midpoint of e.  Side 'L' is the
    sector (predecessor-of-e, e) in the clockwise rotation at v, side 'R' is
    (e, successor-of-e).  Crossing the midpoint continues into the matching
    sector at the other endpoint (L pairs with L, R with R), which is the
    straight-through rule at a degree-4 median vertex.
    """
    emb = net.embedding
    aug = emb.augmented_rotation()
    pos = {}
    for v, darts in aug.items():
        for i, d in enumerate(darts):
            pos[d] = (v, i)

    def dart_at(v, e):
        u0, _ = emb.edges[e]
        return Dart(e, 0 if u0 == v else 1)

    def step(state):
        v, e, side = state
        w = net.edge_map[e].other(v)
        darts = aug[w]
        _, i = pos[dart_at(w, e)]
        if side == "L":
            nxt = darts[i - 1]
            return (w, nxt.edge, "R")
        nxt = darts[(i + 1) % len(darts)]
        return (w, nxt.edge, "L")

    def mirror(state):
        v, e, side = state
        return (net.edge_map[e].other(v), e, side)

    return aug, step, mirror


def median_strands(net):
    """Strands of the median graph, traced combinatorially.

    At each edge midpoint (a degree-4 median vertex) the strand exits through
    the opposite corner.  Strands terminate on the disk boundary next to the
    arcs; any left-over closed orbit is reported as a loop strand.
    """
    aug, step, mirror = _sector_walk(net)
    entries = []
    for v in net.boundary_order:
        graph_edges = [d.edge for d in aug[v] if not is_arc(d.edge)]
        if not graph_edges:
            entries.append((None, (v, "cw")))
            continue
        entries.append(((v, graph_edges[0], "L"), (v, "cw")))
        entries.append(((v, graph_edges[-1], "R"), (v, "ccw")))

    strands = []
    used_terminals = set()
    visited = set()
    for state, terminal in entries:
        if terminal in used_terminals:
            continue
        used_terminals.add(terminal)
        if state is None:
            other = (terminal[0], "ccw")
            used_terminals.add(other)
            strands.append(Strand((), (terminal, other)))
            continue
        crossings = []
        cur = state
        while True:
            visited.add(cur)
            visited.add(mirror(cur))
            crossings.append(cur[1])
            nxt = step(cur)
            if is_arc(nxt[1]):
                end_terminal = (nxt[0], "cw" if nxt[2] == "R" else "ccw")
                used_terminals.add(end_terminal)
                strands.append(Strand(tuple(crossings), (terminal, end_terminal)))
                break
            cur = nxt

    all_states = {(v, d.edge, s)
                  for v, darts in aug.items()
                  for d in darts if not is_arc(d.edge)
                  for s in ("L", "R")}
    leftovers = all_states - visited
    while leftovers:
        start = min(leftovers)
        cycle = [start]
        cur = step(start)
        while cur != start:
            cycle.append(cur)
            cur = step(cur)
        for s in cycle:
            leftovers.discard(s)
            leftovers.discard(mirror(s))
        strands.append(Strand(tuple(e for _, e, _ in cycle), (), is_loop=True))
    return tuple(strands)


@dataclass(frozen=True)
class MinimalityReport:
    minimal: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.minimal


def is_minimal(net):
    """Lens-freeness of the median graph.

    True iff no strand self-intersects, no strand is a closed loop, and every
    pair of strands shares at most one edge midpoint.  Only transversal
    crossings at midpoints count; meeting the boundary circle near a common
    vertex does not.
    """
    strands = median_strands(net)
    for s in strands:
        if s.is_loop:
            return MinimalityReport(False, "closed-loop strand", (s,))
    for s in strands:
        if len(set(s.crossings)) != len(s.crossings):
            dup = next(e for e in s.crossings if s.crossings.count(e) > 1)
            return MinimalityReport(False, "strand self-intersects at edge %r" % dup, (s,))
    for i in range(len(strands)):
        for j in range(i + 1, len(strands)):
            common = set(strands[i].crossings) & set(strands[j].crossings)
            if len(common) > 1:
                return MinimalityReport(
                    False,
                    "strands cross twice (lens) at edges %s" % sorted(common),
                    (strands[i], strands[j]))
    return MinimalityReport(True)
