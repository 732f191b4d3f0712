"""Lam models: dimers, boundary measurements, trips, labels, face weights.

A Lam model is a bicolored disk-embedded graph whose boundary nodes all have
degree one.  Boundary nodes count as white: every edge must join a white
vertex to a black one once boundary nodes are treated as white.  Boundary
nodes are numbered 1..m clockwise by their position in ``boundary_order``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .embedding import Dart, DiskEmbedding, is_arc
from .errors import BadCardinality, BoundaryVertex, NonInteger, NotMinimal

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class ModelVertex:
    id: str
    color: str
    boundary: bool
    origin: str = ""     # provenance tag (b_v / b_F / b_i / w_e) when derived


@dataclass(frozen=True)
class ModelEdge:
    id: str
    u: str
    v: str
    weight: Fraction
    source: str = ""     # network edge id when this edge carries a conductivity

    def other(self, vertex):
        return self.v if vertex == self.u else self.u


@dataclass(frozen=True)
class LamModel:
    vertices: tuple
    edges: tuple
    rotation: tuple
    boundary_order: tuple

    @staticmethod
    def build(vertices, edges, rotation, boundary_order):
        """vertices: (id, color, boundary[, origin]); edges: (id, u, v, weight[, source])."""
        vs = []
        for t in vertices:
            origin = t[3] if len(t) > 3 else ""
            vs.append(ModelVertex(str(t[0]), t[1], bool(t[2]), origin))
        es = []
        for t in edges:
            i, u, v, w = t[:4]
            src = t[4] if len(t) > 4 else ""
            es.append(ModelEdge(str(i), str(u), str(v),
                                w if isinstance(w, float) else Fraction(w), src))
        rot = tuple((str(v), tuple(str(e) for e in r))
                    for v, r in dict(rotation).items())
        return LamModel(tuple(vs), tuple(es), rot,
                        tuple(str(v) for v in boundary_order))

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

    @cached_property
    def incidence(self):
        out = {v.id: [] for v in self.vertices}
        for e in self.edges:
            out[e.u].append(e.id)
            out[e.v].append(e.id)
        return out

    def color(self, vertex_id):
        v = self.vertex_map[vertex_id]
        return WHITE if v.boundary else v.color

    def boundary_position(self, vertex_id):
        """1-based clockwise number of a boundary node."""
        return self.boundary_order.index(vertex_id) + 1

    def inner_ids(self):
        return [v.id for v in self.vertices if not v.boundary]

    def validation_errors(self):
        out = [m for _, m in self.embedding.structure_violations()]
        if out:
            return out
        for b in self.boundary_order:
            if len(self.incidence[b]) != 1:
                out.append("boundary node %r has degree %d, expected 1"
                           % (b, len(self.incidence[b])))
        for e in self.edges:
            if self.color(e.u) == self.color(e.v):
                out.append("edge %r joins two %s vertices" % (e.id, self.color(e.u)))
            if e.weight <= 0:
                out.append("edge %r has non-positive weight" % e.id)
        if not out and not self.embedding.euler_ok():
            out.append("rotation system is not a disk embedding")
        return out


def k_gamma(model):
    """Grassmannian rank of the model from boundary count and inner degrees."""
    total = len(model.boundary_order)
    for v in model.vertices:
        if v.boundary:
            continue
        deg = len(model.incidence[v.id])
        if v.color == BLACK:
            total += deg - 2
        else:
            total += 2 - deg
    if total % 2:
        raise NonInteger("degree formula gives %s/2" % total)
    return total // 2


@dataclass(frozen=True)
class Dimer:
    edges: frozenset
    covered_boundary: frozenset    # 1-based boundary positions

    def weight(self, model):
        w = Fraction(1)
        for e in self.edges:
            w *= model.edge_map[e].weight
        return w


def enumerate_dimers(model, subset):
    """All dimers whose uncovered boundary positions are exactly ``subset``.

    Every interior vertex is covered exactly once; boundary nodes listed in
    the subset must stay uncovered.  Exhaustive backtracking, intended for
    desk-scale models.
    """
    k = k_gamma(model)
    want = frozenset(int(i) for i in subset)
    if len(want) != len(tuple(subset)):
        raise BadCardinality("repeated boundary index in %s" % (sorted(subset),))
    if len(want) != k:
        raise BadCardinality("|I| = %d but k = %d" % (len(want), k))
    if not all(1 <= i <= len(model.boundary_order) for i in want):
        raise BadCardinality("boundary index out of range in %s" % sorted(want))

    forbidden = {model.boundary_order[i - 1] for i in want}
    inner = sorted(model.inner_ids())
    matched = {}
    results = []

    def candidates(v):
        out = []
        for eid in model.incidence[v]:
            o = model.edge_map[eid].other(v)
            if o in matched or o in forbidden:
                continue
            out.append(eid)
        return out

    def extend(remaining):
        if not remaining:
            edges = frozenset(matched.values())
            covered = frozenset(model.boundary_position(x)
                                for x in matched if model.vertex_map[x].boundary)
            results.append(Dimer(edges, covered))
            return
        v = min(remaining, key=lambda x: (len(candidates(x)), x))
        rest = [x for x in remaining if x != v]
        for eid in candidates(v):
            o = model.edge_map[eid].other(v)
            matched[v] = eid
            matched[o] = eid
            inner_o = o in model.vertex_map and not model.vertex_map[o].boundary
            extend([x for x in rest if x != o] if inner_o else rest)
            del matched[v]
            if o in matched:
                del matched[o]

    extend(inner)
    dedup = {d.edges: d for d in results}
    return sorted(dedup.values(), key=lambda d: sorted(d.edges))


def boundary_measurement(model, subset):
    """Dimer partition function with boundary condition ``subset``."""
    return sum((d.weight(model) for d in enumerate_dimers(model, subset)),
               Fraction(0))


def boundary_measurement_vector(model):
    """All boundary measurements keyed by frozenset, in lex subset order."""
    k = k_gamma(model)
    m = len(model.boundary_order)
    out = []
    for cols in combinations(range(1, m + 1), k):
        out.append((frozenset(cols), boundary_measurement(model, cols)))
    return tuple(out)


@dataclass(frozen=True)
class Trip:
    source: int
    target: int
    darts: tuple
    is_loop: bool = False


def _trip_step(model, dart):
    """One move of the one-way strand walk.

    Entering a white vertex the walk leaves along the next edge clockwise;
    entering a black vertex along the next edge counterclockwise.  This is
    the edge-level restatement of the oriented median graph rule.
    """
    v = model.embedding.head(dart)
    if model.vertex_map[v].boundary:
        return None
    rot = model.rotation_map[v]
    i = rot.index(dart.edge)
    nxt = rot[(i + 1) % len(rot)] if model.color(v) == WHITE else rot[i - 1]
    e = model.edge_map[nxt]
    return Dart(nxt, 0 if e.u == v else 1)


def lam_strands(model):
    """Directed strands as trips on the model; one per boundary source.

    Darts not reached from any boundary node form closed loop trips, which
    are returned flagged.  A lollipop bounce (boundary node hanging off a
    degree-one inner vertex) is an ordinary two-dart trip, not a loop.
    """
    trips = []
    used = set()
    for pos, b in enumerate(model.boundary_order, start=1):
        eid = model.incidence[b][0]
        e = model.edge_map[eid]
        d = Dart(eid, 0 if e.u == b else 1)
        darts = []
        while d is not None:
            darts.append(d)
            used.add(d)
            d = _trip_step(model, d)
        target = model.boundary_position(model.embedding.head(darts[-1]))
        trips.append(Trip(pos, target, tuple(darts)))
    all_darts = {Dart(e.id, s) for e in model.edges for s in (0, 1)}
    leftovers = all_darts - used
    while leftovers:
        start = min(leftovers)
        cycle = [start]
        leftovers.discard(start)
        d = _trip_step(model, start)
        while d != start:
            cycle.append(d)
            leftovers.discard(d)
            d = _trip_step(model, d)
        trips.append(Trip(0, 0, tuple(cycle), is_loop=True))
    return tuple(trips)


@dataclass(frozen=True)
class ModelMinimalityReport:
    minimal: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.minimal


def is_minimal_model(model):
    """Reducedness of the model in terms of its trips.

    Crossings happen where two trips traverse the same inner-to-inner edge
    (necessarily in opposite directions).  The model is minimal iff there are
    no closed loop trips, no trip crosses itself, and no two trips cross
    twice in the same relative order (the forbidden oriented lens).  Lollipop
    bounces are fine: their doubled edge touches a boundary node, which is
    not a crossing site.
    """
    trips = lam_strands(model)
    for t in trips:
        if t.is_loop:
            return ModelMinimalityReport(False, "closed loop trip", (t,))

    def inner_inner(eid):
        e = model.edge_map[eid]
        return not (model.vertex_map[e.u].boundary or model.vertex_map[e.v].boundary)

    passages = {}
    for t in trips:
        for step, d in enumerate(t.darts):
            if inner_inner(d.edge):
                passages.setdefault(d.edge, []).append((t, step))
    crossings = {}
    for eid, users in passages.items():
        if len(users) == 2 and users[0][0] is users[1][0]:
            return ModelMinimalityReport(
                False, "trip from %d crosses itself at edge %r"
                % (users[0][0].source, eid), (users[0][0],))
        key = tuple(sorted((users[0][0].source, users[1][0].source)))
        crossings.setdefault(key, []).append(eid)
    trip_by_source = {t.source: t for t in trips}
    for (a, b), edges in crossings.items():
        if len(edges) < 2:
            continue
        ta, tb = trip_by_source[a], trip_by_source[b]
        pos_a = {d.edge: i for i, d in enumerate(ta.darts)}
        pos_b = {d.edge: i for i, d in enumerate(tb.darts)}
        for e1, e2 in combinations(edges, 2):
            if (pos_a[e1] < pos_a[e2]) == (pos_b[e1] < pos_b[e2]):
                return ModelMinimalityReport(
                    False,
                    "trips from %d and %d form an oriented lens at edges %r, %r"
                    % (a, b, e1, e2), (ta, tb))
    return ModelMinimalityReport(True)


@dataclass(frozen=True)
class FaceLabeling:
    labels: tuple      # ((face id, frozenset of 1-based boundary indices), ...)

    def as_dict(self):
        return dict(self.labels)

    def __getitem__(self, face_id):
        return self.as_dict()[face_id]

    def label_sets(self):
        return [lbl for _, lbl in self.labels]


def _left_region(model, trip, faces, dart_face):
    """Ids of all faces in the disk region left of a boundary-to-boundary trip.

    The trip curve, closed up along the disk boundary, separates the faces
    into a left and a right region; flood fill across the edges the trip does
    not traverse finds the left one.  A lollipop bounce does not separate
    anything (both sides of its pendant edge see the same face) and labels no
    face, matching the black fixed point convention.
    """
    left = {dart_face[d.reverse].id for d in trip.darts}
    right = {dart_face[d].id for d in trip.darts}
    if left & right:
        return set()
    blocked = {d.edge for d in trip.darts}
    adjacency = {f.id: set() for f in faces}
    for f in faces:
        for d in f.darts:
            if not is_arc(d.edge) and d.edge not in blocked:
                adjacency[f.id].add(dart_face[d.reverse].id)
    seen = set(left)
    stack = list(left)
    while stack:
        for g in adjacency[stack.pop()]:
            if g not in seen:
                seen.add(g)
                stack.append(g)
    if seen & right:
        raise NotMinimal("strand from %d does not separate the disk" % trip.source)
    return seen


def scott_labels(model):
    """Face labels: face F picks up index i when F lies left of the trip from i."""
    rep = is_minimal_model(model)
    if not rep:
        raise NotMinimal(rep.reason)
    k = k_gamma(model)
    faces, dart_face = model.embedding.trace_faces()
    labels = {f.id: set() for f in faces}
    for t in lam_strands(model):
        for fid in _left_region(model, t, faces, dart_face):
            labels[fid].add(t.source)
    for f in faces:
        if len(labels[f.id]) != k:
            raise NotMinimal("face %s received %d labels, expected %d"
                             % (f.id, len(labels[f.id]), k))
    return FaceLabeling(tuple((f.id, frozenset(labels[f.id])) for f in faces))


def face_weight(model, face_id):
    """Alternating weight product around the clockwise face walk.

    Edges traversed white-to-black multiply, black-to-white divide; boundary
    arcs contribute nothing.  Gauge transformations leave this invariant.
    """
    faces, _ = model.embedding.trace_faces()
    face = next(f for f in faces if f.id == face_id)
    out = Fraction(1)
    for d in face.darts:
        if is_arc(d.edge):
            continue
        e = model.edge_map[d.edge]
        if model.color(model.embedding.tail(d)) == WHITE:
            out *= e.weight
        else:
            out /= e.weight
    return out


def face_weights(model):
    faces, _ = model.embedding.trace_faces()
    return {f.id: face_weight(model, f.id) for f in faces}


def gauge_transform(model, vertex_id, t):
    """Scale every edge at one inner vertex by t > 0."""
    v = model.vertex_map[vertex_id]
    if v.boundary:
        raise BoundaryVertex("gauge transformations act on inner vertices only")
    t = t if isinstance(t, float) else Fraction(t)
    if t <= 0:
        raise ValueError("gauge factor must be positive")
    es = tuple(ModelEdge(e.id, e.u, e.v,
                         e.weight * t if vertex_id in (e.u, e.v) else e.weight,
                         e.source)
               for e in model.edges)
    return LamModel(model.vertices, es, model.rotation, model.boundary_order)
