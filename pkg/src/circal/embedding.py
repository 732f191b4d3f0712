"""Combinatorial disk embeddings: darts, boundary arcs and face tracing.

A disk-embedded graph is described by a clockwise rotation system plus the
clockwise order of boundary vertices on the disk boundary.  The boundary
circle is materialized as synthetic "arc" edges between consecutive boundary
vertices, so the outer region splits into one boundary face per arc.  Face
tracing follows the rule: after traversing a dart into its head vertex,
continue along the predecessor of the reversed dart in the clockwise rotation
there.  With clockwise rotations every face walk keeps its region on the
right-hand side of each dart.

Rotation lists of boundary vertices are linear, not cyclic: they start at the
edge closest to the arc toward the next boundary vertex (clockwise) and end at
the edge closest to the arc toward the previous one.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidEmbedding

ARC = "~arc:"


class Dart(NamedTuple):
    edge: str
    end: int  # tail is endpoint[end], head is endpoint[1 - end]

    @property
    def reverse(self):
        return Dart(self.edge, 1 - self.end)


def is_arc(edge_id):
    return edge_id.startswith(ARC)


def arc_index(edge_id):
    return int(edge_id[len(ARC):])


@dataclass(frozen=True)
class Face:
    id: str
    darts: tuple            # clockwise walk, graph darts and arc darts mixed
    is_boundary_face: bool   # bounded partly by the disk boundary

    @property
    def arc_darts(self):
        return tuple(d for d in self.darts if is_arc(d.edge))

    @property
    def graph_darts(self):
        return tuple(d for d in self.darts if not is_arc(d.edge))


class DiskEmbedding:
    """Shared embedding engine for networks and Lam models.

    vertices: {vertex id: is_boundary}
    edges:    {edge id: (u, v)}
    rotation: {vertex id: (edge ids clockwise)}
    boundary_order: clockwise tuple of boundary vertex ids
    """

    def __init__(self, vertices, edges, rotation, boundary_order):
        self.vertices = dict(vertices)
        self.edges = {e: (u, v) for e, (u, v) in edges.items()}
        self.rotation = {v: tuple(r) for v, r in rotation.items()}
        self.boundary_order = tuple(boundary_order)
        self._faces = None
        self._dart_face = None

    # -- structure ---------------------------------------------------------

    def structure_violations(self):
        """Static checks that must pass before face tracing is meaningful."""
        out = []
        n = len(self.boundary_order)
        seen = set()
        for v in self.boundary_order:
            if v in seen:
                out.append(("boundary-order", "vertex %r repeated in boundary_order" % v))
            seen.add(v)
            if v not in self.vertices:
                out.append(("unknown-vertex", "boundary_order names unknown vertex %r" % v))
            elif not self.vertices[v]:
                out.append(("boundary-order", "vertex %r in boundary_order is not flagged boundary" % v))
        for v, flag in self.vertices.items():
            if flag and v not in seen:
                out.append(("boundary-order", "boundary vertex %r missing from boundary_order" % v))
        for e, (u, v) in self.edges.items():
            if u not in self.vertices or v not in self.vertices:
                out.append(("unknown-vertex", "edge %r references unknown vertex" % e))
            elif u == v:
                out.append(("self-loop", "edge %r is a self-loop" % e))
        if out:
            return out
        incident = {v: [] for v in self.vertices}
        for e, (u, v) in self.edges.items():
            incident[u].append(e)
            incident[v].append(e)
        for v in self.vertices:
            rot = self.rotation.get(v, ())
            if sorted(rot) != sorted(incident[v]):
                out.append(("bad-rotation",
                            "rotation at %r does not list its incident edge ends exactly once" % v))
        if n == 0 and self.vertices:
            out.append(("boundary-order", "no boundary vertices"))
        return out

    # -- darts ---------------------------------------------------------------

    def tail(self, d):
        u, v = self._endpoints(d.edge)
        return u if d.end == 0 else v

    def head(self, d):
        u, v = self._endpoints(d.edge)
        return v if d.end == 0 else u

    def _endpoints(self, edge_id):
        if is_arc(edge_id):
            i = arc_index(edge_id)
            n = len(self.boundary_order)
            return self.boundary_order[i], self.boundary_order[(i + 1) % n]
        return self.edges[edge_id]

    def _arc_ids(self):
        return [ARC + str(i) for i in range(len(self.boundary_order))]

    def augmented_rotation(self):
        """Clockwise dart rotation per vertex, with boundary arcs inserted."""
        n = len(self.boundary_order)
        pos = {v: i for i, v in enumerate(self.boundary_order)}
        out = {}
        for v in self.vertices:
            darts = []
            if v in pos:
                i = pos[v]
                darts.append(Dart(ARC + str(i), 0))
            for e in self.rotation.get(v, ()):
                u0, _ = self.edges[e]
                darts.append(Dart(e, 0 if u0 == v else 1))
            if v in pos:
                i = pos[v]
                darts.append(Dart(ARC + str((i - 1) % n), 1))
            out[v] = darts
        return out

    # -- faces ---------------------------------------------------------------

    def trace_faces(self):
        """Return (faces, dart->face map); raises InvalidEmbedding on bad input.

        The all-arc outer walk (the region outside the disk) is dropped.
        Euler's relation V - E + F = 2 for the closed-up sphere is enforced.
        """
        if self._faces is not None:
            return self._faces, self._dart_face
        bad = self.structure_violations()
        if bad:
            raise InvalidEmbedding("; ".join(m for _, m in bad))
        aug = self.augmented_rotation()
        index = {}
        for v, darts in aug.items():
            for i, d in enumerate(darts):
                if d in index:
                    raise InvalidEmbedding("dart %r appears twice in the rotation system" % (d,))
                index[d] = (v, i)
        all_darts = sorted(index, key=lambda d: (d.edge, d.end))
        for d in all_darts:
            if d.reverse not in index:
                raise InvalidEmbedding("dart %r has no reverse" % (d,))

        def next_dart(d):
            v, _ = index[d.reverse]
            darts = aug[v]
            _, i = index[d.reverse]
            return darts[i - 1]

        unseen = dict.fromkeys(all_darts)
        walks = []
        for d0 in all_darts:
            if d0 not in unseen:
                continue
            walk = []
            d = d0
            while d in unseen:
                del unseen[d]
                walk.append(d)
                d = next_dart(d)
            if d != d0:
                raise InvalidEmbedding("face walk starting at %r does not close" % (d0,))
            walks.append(walk)

        outer = [w for w in walks
                 if all(is_arc(d.edge) and d.end == 1 for d in w)]
        if len(outer) != 1:
            raise InvalidEmbedding("rotation system does not produce a single outer walk "
                                   "(is every component attached to the boundary?)")
        n_v = len(self.vertices)
        n_e = len(self.edges) + len(self.boundary_order)
        if n_v - n_e + len(walks) != 2:
            raise InvalidEmbedding(
                "non-planar rotation: Euler count V-E+F = %d, expected 2"
                % (n_v - n_e + len(walks)))

        faces = []
        dart_face = {}
        k = 0
        for w in walks:
            if w is outer[0]:
                continue
            arcs = [d for d in w if is_arc(d.edge)]
            if arcs:
                fid = "fb" + str(min(arc_index(d.edge) for d in arcs))
            else:
                fid = "f" + str(k)
                k += 1
            face = Face(fid, tuple(w), bool(arcs))
            faces.append(face)
            for d in w:
                dart_face[d] = face
        faces.sort(key=lambda f: (f.is_boundary_face, f.id))
        self._faces = tuple(faces)
        self._dart_face = dart_face
        return self._faces, self._dart_face

    def face_of(self, d):
        """Face on the right-hand side of dart d."""
        _, m = self.trace_faces()
        return m[d]

    def face_left_of(self, d):
        return self.face_of(d.reverse)

    def euler_ok(self):
        try:
            self.trace_faces()
        except InvalidEmbedding:
            return False
        return True

    # -- connectivity ----------------------------------------------------------

    def components(self):
        """Connected components over graph edges only (no arcs)."""
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges.values():
            adj[u].add(v)
            adj[v].add(u)
        seen = set()
        comps = []
        for v0 in sorted(self.vertices):
            if v0 in seen:
                continue
            stack, comp = [v0], set()
            while stack:
                v = stack.pop()
                if v in comp:
                    continue
                comp.add(v)
                stack.extend(adj[v] - comp)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self):
        return len(self.components()) <= 1
